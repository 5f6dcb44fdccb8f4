"""Exception types shared across the package."""


class DegenerateDistribution(ValueError):
    """Degree histogram has fewer than two distinct degrees; slope undefined."""


class InvalidCode(ValueError):
    """Edge-tuple sequence violates the structural rules of a DFS code."""


class UnknownLabel(KeyError):
    """A label (or timestamp) is not an exact member of the vocabulary."""


class BinUnfillable(RuntimeError):
    """A dataset bin's acceptance rate stayed below the floor for the probe budget."""

    def __init__(self, bin_index, target, nearest, attempts):
        self.bin_index = bin_index
        self.target = target
        self.nearest = nearest
        self.attempts = attempts
        super().__init__(
            f"bin {bin_index} target {target} unfillable after {attempts} draws; "
            f"nearest achieved features {nearest}"
        )


class NonFiniteLoss(RuntimeError):
    """Training produced a NaN/inf loss; records the offending batch."""

    def __init__(self, epoch, batch_index):
        self.epoch = epoch
        self.batch_index = batch_index
        super().__init__(f"non-finite loss at epoch {epoch}, batch {batch_index}")
