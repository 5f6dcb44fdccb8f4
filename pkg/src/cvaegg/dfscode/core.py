"""Edge-tuple sequences: canonical codec between graphs and DFS codes.

A graph is serialized as an ordered list of edges discovered by a
depth-first search.  Each edge is a 5-tuple ``(t_u, t_v, l_u, l_e, l_v)``
of endpoint discovery timestamps and labels; edges carry no label, so
``l_e`` is a fixed ``None`` sentinel.  Among all DFS traversals of a graph
the lexicographically smallest edge sequence (gSpan order) is a canonical
form: two graphs are isomorphic exactly when their minimum codes are equal.

The minimum-code search lives in a kernel module with two interchangeable
implementations (compiled and pure Python); this module holds everything
shape-independent: tuple ordering, decoding, validation, the exhaustive
enumeration used as a test oracle, and the text format.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidCode
from ..graphs import Graph, adjacency_lists, edge_key, is_connected

EDGE_UNLABELED = None


@dataclass(frozen=True)
class EdgeTuple:
    t_u: int
    t_v: int
    l_u: float
    l_e: object
    l_v: float

    @property
    def is_forward(self) -> bool:
        return self.t_u < self.t_v


def edge_tuple_less(a: EdgeTuple, b: EdgeTuple) -> bool:
    """gSpan order on code positions.

    Backward edges sort before forward extensions; forward edges compare by
    (t_v asc, t_u desc), backward by (t_u asc, t_v asc); equal positions fall
    through to (l_u, l_v) ascending.  Plain tuple comparison would get the
    mixed forward/backward cases wrong, hence the explicit rules.
    """
    af, bf = a.is_forward, b.is_forward
    if af != bf:
        if af:
            return a.t_v <= b.t_u
        return a.t_u < b.t_v
    if af:
        if a.t_v != b.t_v:
            return a.t_v < b.t_v
        if a.t_u != b.t_u:
            return a.t_u > b.t_u
    else:
        if a.t_u != b.t_u:
            return a.t_u < b.t_u
        if a.t_v != b.t_v:
            return a.t_v < b.t_v
    if a.l_u != b.l_u:
        return a.l_u < b.l_u
    if a.l_v != b.l_v:
        return a.l_v < b.l_v
    return False


class DfsCode:
    """Immutable ordered list of :class:`EdgeTuple`, compared in gSpan order."""

    __slots__ = ("tuples",)

    def __init__(self, tuples):
        self.tuples = tuple(tuples)

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __getitem__(self, i):
        return self.tuples[i]

    def __eq__(self, other):
        return isinstance(other, DfsCode) and self.tuples == other.tuples

    def __hash__(self):
        return hash(self.tuples)

    def __lt__(self, other):
        for a, b in zip(self.tuples, other.tuples):
            if a != b:
                return edge_tuple_less(a, b)
        return len(self) < len(other)

    def __repr__(self):
        body = ", ".join(
            f"({e.t_u},{e.t_v},{e.l_u!r},{e.l_v!r})" for e in self.tuples
        )
        return f"DfsCode[{body}]"


def _scan(tuples):
    """Incrementally check structural validity; raise InvalidCode on violation.

    Returns (max_timestamp, labels_by_timestamp, edge_set).
    """
    max_t = -1
    labels: dict[int, float] = {}
    edges: set[tuple[int, int]] = set()

    def put_label(t, lab):
        if t in labels:
            if labels[t] != lab:
                raise InvalidCode(f"conflicting labels for timestamp {t}")
        else:
            labels[t] = lab

    for i, e in enumerate(tuples):
        if e.l_e is not EDGE_UNLABELED:
            raise InvalidCode(f"tuple {i}: edge label must be the unlabeled sentinel")
        if e.t_u == e.t_v:
            raise InvalidCode(f"tuple {i}: self-loop timestamp {e.t_u}")
        if i == 0:
            if (e.t_u, e.t_v) != (0, 1):
                raise InvalidCode("first tuple must be (0, 1, ., ., .)")
            max_t = 1
        elif e.t_u < e.t_v:
            if e.t_u > max_t:
                raise InvalidCode(f"tuple {i}: forward edge from unseen timestamp {e.t_u}")
            if e.t_v != max_t + 1:
                raise InvalidCode(f"tuple {i}: forward edge skips timestamp ({e.t_v} != {max_t + 1})")
            max_t = e.t_v
        else:
            if e.t_u > max_t or e.t_v > max_t:
                raise InvalidCode(f"tuple {i}: backward edge references unseen timestamp")
        key = edge_key(e.t_u, e.t_v)
        if key in edges:
            raise InvalidCode(f"tuple {i}: duplicate edge {key}")
        edges.add(key)
        put_label(e.t_u, e.l_u)
        put_label(e.t_v, e.l_v)
    return max_t, labels, edges


def decode(code) -> Graph:
    """Rebuild the graph whose nodes are the code's timestamps.

    Total on structurally valid codes; raises :class:`InvalidCode` otherwise.
    """
    tuples = list(code)
    if not tuples:
        raise InvalidCode("empty code")
    max_t, labels, edges = _scan(tuples)
    n = max_t + 1
    return Graph(n, edges, [labels[t] for t in range(n)])


def validate_partial(tuples) -> bool:
    """True iff the prefix could extend to a valid code (empty prefix counts)."""
    try:
        _scan(list(tuples))
    except InvalidCode:
        return False
    return True


def all_dfs_codes(g: Graph) -> set[DfsCode]:
    """Every valid DFS code of ``g``: all start nodes and neighbor orders.

    Exhaustive, exponential in symmetric graphs; meant as the minimality
    oracle for small inputs (roughly |edges| <= 8).
    """
    _require_encodable(g)
    labels = g.node_labels
    adj = adjacency_lists(g)
    m = g.edge_count
    n = g.node_count
    results: set[tuple] = set()
    vtime = [-1] * n

    def rec(stack: list[int], nv: int, code: list):
        if len(code) == m:
            results.add(tuple(code))
            return
        top = len(stack) - 1
        while top >= 0 and all(vtime[w] >= 0 for w in adj[stack[top]]):
            top -= 1
        v = stack[top]
        base = stack[: top + 1]
        for w in adj[v]:
            if vtime[w] >= 0:
                continue
            t_new = nv
            vtime[w] = t_new
            emitted = [(vtime[v], t_new, labels[v], labels[w])]
            backs = sorted(
                (vtime[x], labels[x]) for x in adj[w] if x != v and vtime[x] >= 0
            )
            emitted.extend((t_new, tx, labels[w], lx) for tx, lx in backs)
            rec(base + [w], nv + 1, code + emitted)
            vtime[w] = -1

    for s in range(n):
        vtime[s] = 0
        rec([s], 1, [])
        vtime[s] = -1
    return {
        DfsCode(EdgeTuple(tu, tv, lu, EDGE_UNLABELED, lv) for tu, tv, lu, lv in raw)
        for raw in results
    }


def _require_encodable(g: Graph) -> None:
    if g.node_count < 2:
        raise ValueError("encoding needs at least 2 nodes")
    if g.node_labels is None:
        raise ValueError("encoding needs node labels")
    if not is_connected(g):
        raise ValueError("encoding needs a connected graph")


def _twin_classes(n, ranks, adj) -> list[int]:
    """Partition nodes into interchangeable groups (equal-label open or
    closed neighborhood twins, merged transitively).  Any permutation within
    a group is a graph automorphism, which lets the search keep one
    representative embedding per group signature."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    groups: dict[tuple, int] = {}
    for v in range(n):
        open_key = (ranks[v], tuple(adj[v]))
        closed_key = (ranks[v], tuple(sorted(adj[v] + [v])))
        for key in (open_key, closed_key):
            if key in groups:
                union(groups[key], v)
            else:
                groups[key] = v
    return [find(v) for v in range(n)]


def _prepare(g: Graph):
    """Integer-coded view of the graph for the search kernels."""
    n = g.node_count
    labels = g.node_labels
    values = sorted(set(labels))
    rank_of = {lab: i for i, lab in enumerate(values)}
    ranks = [rank_of[lab] for lab in labels]
    adj = adjacency_lists(g)
    eid_of = {e: i for i, e in enumerate(sorted(g.edges))}
    indptr = [0]
    indices: list[int] = []
    eids: list[int] = []
    for v in range(n):
        for w in adj[v]:
            indices.append(w)
            eids.append(eid_of[edge_key(v, w)])
        indptr.append(len(indices))
    classes = _twin_classes(n, ranks, adj)
    return n, g.edge_count, ranks, classes, indptr, indices, eids, values


def min_dfs_code(g: Graph, kernel=None) -> DfsCode:
    """Lexicographically smallest valid DFS code of ``g`` (canonical form)."""
    _require_encodable(g)
    if kernel is None:
        from . import _active_kernel

        kernel = _active_kernel()
    n, m, ranks, classes, indptr, indices, eids, values = _prepare(g)
    raw = kernel(n, m, ranks, classes, indptr, indices, eids)
    return DfsCode(
        EdgeTuple(tu, tv, values[ru], EDGE_UNLABELED, values[rv])
        for tu, tv, ru, rv in raw
    )


# --- text format -----------------------------------------------------------
#
# One tuple per line `t_u t_v l_u l_e l_v`; the edge-label slot prints as
# `-`; node labels print with full round-trip precision; final line `EOS`.

EOS_LINE = "EOS"
_EDGE_TOKEN = "-"


def format_code(code) -> str:
    lines = [
        f"{e.t_u} {e.t_v} {e.l_u!r} {_EDGE_TOKEN} {e.l_v!r}" for e in code
    ]
    lines.append(EOS_LINE)
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> DfsCode:
    tuples = []
    saw_eos = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if saw_eos:
            raise ValueError(f"line {lineno}: content after EOS")
        if line.strip() == EOS_LINE:
            saw_eos = True
            continue
        parts = line.split()
        if len(parts) != 5 or parts[3] != _EDGE_TOKEN:
            raise ValueError(f"line {lineno}: malformed tuple {line!r}")
        tuples.append(
            EdgeTuple(
                int(parts[0]), int(parts[1]), float(parts[2]), EDGE_UNLABELED, float(parts[4])
            )
        )
    if not saw_eos:
        raise ValueError("missing EOS line")
    return DfsCode(tuples)


def write_code(code, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_code(code))


def read_code(path) -> DfsCode:
    with open(path, "r", encoding="ascii") as fh:
        return parse_code(fh.read())
