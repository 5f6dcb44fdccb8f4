"""Undirected simple graphs and the Connecting Nearest Neighbor generator.

Graphs are small (tens of nodes), so everything here favors clarity and
exact reproducibility over asymptotic cleverness.  All randomness goes
through a seeded ``random.Random`` instance, which is portable across
platforms and Python versions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


@dataclass
class Graph:
    """Undirected simple graph with optional per-node real labels.

    ``edges`` holds normalized ``(u, v)`` pairs with ``u < v``.  Labels, when
    present, are reciprocal degrees assigned by :func:`relabel_reciprocal_degree`
    (or whatever a decoded edge sequence carried).
    """

    node_count: int
    edges: set[tuple[int, int]] = field(default_factory=set)
    node_labels: list[float] | None = None

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be >= 0")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{u})")
            if not (0 <= u < v < self.node_count):
                raise ValueError(f"bad edge ({u},{v}) for node_count {self.node_count}")
        if self.node_labels is not None and len(self.node_labels) != self.node_count:
            raise ValueError("node_labels length must equal node_count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an edge to the stored (min, max) orientation."""
    return (u, v) if u < v else (v, u)


def adjacency_lists(g: Graph) -> list[list[int]]:
    """Neighbor lists, each sorted ascending by node index."""
    adj: list[list[int]] = [[] for _ in range(g.node_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return adj


def degree(g: Graph, v: int) -> int:
    """Number of edges incident to ``v``."""
    if not 0 <= v < g.node_count:
        raise ValueError(f"node {v} out of range")
    return sum(1 for e in g.edges if v in e)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees of all nodes, indexed by node."""
    degs = [0] * g.node_count
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    return degs


def relabel_reciprocal_degree(g: Graph) -> Graph:
    """Return a copy of ``g`` whose labels are exact reciprocal degrees."""
    degs = degree_sequence(g)
    if any(d == 0 for d in degs):
        raise ValueError("reciprocal degree undefined for isolated nodes")
    return Graph(g.node_count, set(g.edges), [1.0 / d for d in degs])


def is_connected(g: Graph) -> bool:
    """True iff every node is reachable from node 0 (single-node graphs count)."""
    if g.node_count == 0:
        raise ValueError("empty graph")
    if g.node_count == 1:
        return True
    adj = adjacency_lists(g)
    seen = [False] * g.node_count
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


@dataclass(frozen=True)
class CnnParams:
    """Parameters of the Connecting Nearest Neighbor growth process."""

    n: int
    u: float
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.u <= 1.0:
            raise ValueError("u must be in [0, 1]")


def cnn_generate(params: CnnParams, flush_steps: int = 0) -> Graph:
    """Grow a connected graph by the Connecting Nearest Neighbor process.

    Each step either attaches a fresh node to a uniformly random existing
    node (probability 1-u, registering the newcomer's two-hop pairs as
    potential edges) or converts one uniformly random potential edge into a
    real edge (probability u).  A conversion step that draws pairs which
    already became edges keeps drawing until it realizes one or the pool
    empties.  When a conversion is drawn but no potential edges exist yet,
    the step attaches a node instead, which keeps u=1 from stalling and
    leaves the conditional growth law unchanged.  After the node budget is
    spent, ``flush_steps`` extra conversion attempts run.
    """
    rng = random.Random(params.seed)
    n, u = params.n, params.u
    if n == 1:
        return Graph(1, set())

    edges: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[]]
    potential: list[tuple[int, int]] = []

    def pop_uniform() -> tuple[int, int] | None:
        while potential:
            i = rng.randrange(len(potential))
            potential[i], potential[-1] = potential[-1], potential[i]
            pair = potential.pop()
            if pair not in edges:
                return pair
        return None

    def realize(pair: tuple[int, int]) -> None:
        a, b = pair
        edges.add(pair)
        adj[a].append(b)
        adj[b].append(a)

    count = 1
    while count < n:
        if rng.random() < u and potential:
            pair = pop_uniform()
            if pair is not None:
                realize(pair)
            continue
        x = count
        y = rng.randrange(count)
        adj.append([])
        count += 1
        realize(edge_key(x, y))
        for w in adj[y]:
            if w != x:
                potential.append(edge_key(x, w))

    for _ in range(flush_steps):
        pair = pop_uniform()
        if pair is None:
            break
        realize(pair)

    return Graph(n, edges)


# --- text format -----------------------------------------------------------
#
# One graph per file:
#   n <node_count>
#   v <index> <label>     (label with 6 significant digits)
#   e <u> <v>             (u < v, sorted lexicographically)
# ASCII, newline-terminated.


def format_graph(g: Graph) -> str:
    if g.node_labels is None:
        raise ValueError("graph text format requires node labels")
    lines = [f"n {g.node_count}"]
    for i, lab in enumerate(g.node_labels):
        lines.append(f"v {i} {lab:.6g}")
    for u, v in sorted(g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    node_count = None
    labels: dict[int, float] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "n":
            node_count = int(parts[1])
        elif tag == "v":
            labels[int(parts[1])] = float(parts[2])
        elif tag == "e":
            u, v = int(parts[1]), int(parts[2])
            edges.add(edge_key(u, v))
        else:
            raise ValueError(f"line {lineno}: unknown record {tag!r}")
    if node_count is None:
        raise ValueError("missing 'n' header line")
    label_list = [labels[i] for i in range(node_count)] if labels else None
    return Graph(node_count, edges, label_list)


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def permute_graph(g: Graph, perm: list[int]) -> Graph:
    """Relabel node indices by ``perm`` (node i becomes perm[i])."""
    if sorted(perm) != list(range(g.node_count)):
        raise ValueError("perm must be a permutation of node indices")
    edges = {edge_key(perm[u], perm[v]) for u, v in g.edges}
    labels = None
    if g.node_labels is not None:
        labels = [0.0] * g.node_count
        for i, lab in enumerate(g.node_labels):
            labels[perm[i]] = lab
    return Graph(g.node_count, edges, labels)
