"""Structural feature functions and the condition vector built from them.

The condition vector is ``[scaling_exponent, clustering_coefficient]``:
the log-log slope of the degree histogram followed by the mean local
clustering coefficient.  Both are pure functions of the graph structure
and invariant under node reindexing.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateDistribution
from .graphs import Graph, adjacency_lists, degree_sequence


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != 2:
            raise ValueError("expected [scaling_exponent, clustering_coefficient]")

    @property
    def scaling_exponent(self) -> float:
        return self.values[0]

    @property
    def clustering(self) -> float:
        return self.values[1]


def clustering_coefficient(g: Graph) -> float:
    """Mean over nodes of the fraction of neighbor pairs that are adjacent.

    Nodes of degree < 2 contribute 0.
    """
    if g.node_count < 1:
        raise ValueError("empty graph")
    adj = [set(nbrs) for nbrs in adjacency_lists(g)]
    total = 0.0
    for v in range(g.node_count):
        nbrs = sorted(adj[v])
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        for i in range(d):
            for j in range(i + 1, d):
                if nbrs[j] in adj[nbrs[i]]:
                    links += 1
        total += 2.0 * links / (d * (d - 1))
    return total / g.node_count


def degree_histogram(g: Graph) -> dict[int, int]:
    """Counts of each degree value >= 1."""
    counts = Counter(d for d in degree_sequence(g) if d >= 1)
    return dict(counts)


def scaling_exponent(g: Graph) -> float:
    """Least-squares slope of log(count_k) against log(k), k >= 1.

    Raises :class:`DegenerateDistribution` when the histogram has fewer
    than two occupied degrees (regular graphs).
    """
    hist = degree_histogram(g)
    if len(hist) < 2:
        raise DegenerateDistribution(
            f"need >= 2 distinct degrees, got {sorted(hist)}"
        )
    xs = [math.log(k) for k in sorted(hist)]
    ys = [math.log(hist[k]) for k in sorted(hist)]
    n = len(xs)
    xbar = sum(xs) / n
    ybar = sum(ys) / n
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return sxy / sxx


def condition_vector(g: Graph) -> FeatureVector:
    """Feature vector ``[scaling_exponent, clustering_coefficient]``."""
    return FeatureVector((scaling_exponent(g), clustering_coefficient(g)))
