"""Labeled graphs on the vertex set ``{1, ..., n}``.

Vertices and labels are the same thing here: a graph is a vertex count plus a
canonical edge list. Paths built with :func:`make_path` also remember their
position order so ribbon code never has to rediscover it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from chromqsym.validation import check_labeling

__all__ = [
    "LabeledGraph",
    "make_path",
    "make_star",
    "flip",
    "ad_pattern",
    "swap_pattern",
    "pattern_to_labeling",
    "bipartition",
    "is_connected",
    "chromatic_polynomial_value",
    "random_tree",
    "parse_graph_text",
    "format_graph_text",
]


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on ``[n]``.

    ``edges`` is stored canonically: each pair has ``i < j`` and the pairs are
    sorted. ``order`` is the position order of a path, or ``None``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    order: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        canon = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            pair = (min(i, j), max(i, j))
            if pair in canon:
                raise ValueError(f"duplicate edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.order is not None:
            order = check_labeling(self.order)
            if len(order) != self.n:
                raise ValueError("path order must list every vertex once")
            expected = {tuple(sorted(p)) for p in zip(order, order[1:])}
            if expected != canon:
                raise ValueError("path order does not match the edge set")
            object.__setattr__(self, "order", order)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledGraph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(nb) for v, nb in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def is_path(self) -> bool:
        return self.order is not None

    def __str__(self) -> str:
        if self.order is not None:
            return "path " + "-".join(map(str, self.order))
        body = ", ".join(f"{i}-{j}" for i, j in self.edges)
        return f"graph n={self.n} [{body}]"


def make_path(labeling: Sequence[int]) -> LabeledGraph:
    """Path whose i-th position carries ``labeling[i]``.

    >>> make_path([3, 4, 1, 2]).edges
    ((1, 2), (1, 4), (3, 4))
    """
    order = check_labeling(labeling)
    return LabeledGraph(len(order), tuple(zip(order, order[1:])), order=order)


def make_star(n: int, center: int) -> LabeledGraph:
    """Star ``K_{1,n-1}`` with the given center label."""
    if n < 3:
        raise ValueError("a star needs n >= 3 to have a unique central vertex")
    if not 1 <= center <= n:
        raise ValueError(f"center {center} outside 1..{n}")
    edges = [(center, j) for j in range(1, n + 1) if j != center]
    if n == 3:
        leaves = [j for j in range(1, 4) if j != center]
        return LabeledGraph(3, tuple(edges), order=(leaves[0], center, leaves[1]))
    return LabeledGraph(n, tuple(edges))


def flip(G: LabeledGraph) -> LabeledGraph:
    """Relabel every vertex ``i`` as ``n + 1 - i``."""
    n = G.n
    edges = tuple((n + 1 - j, n + 1 - i) for i, j in G.edges)
    order = None if G.order is None else tuple(n + 1 - v for v in G.order)
    return LabeledGraph(n, edges, order=order)


def ad_pattern(labeling: Sequence[int]) -> str:
    """Ascent/descent word of consecutive labels, e.g. ``(3,5,1,4,2) -> 'adad'``."""
    seq = check_labeling(labeling)
    return "".join("a" if x < y else "d" for x, y in zip(seq, seq[1:]))


def swap_pattern(word: str) -> str:
    return word.translate(str.maketrans("ad", "da"))


def pattern_to_labeling(word: str) -> tuple[int, ...]:
    """A canonical permutation whose ad-pattern is ``word``.

    Each ``a`` places a new maximum, each ``d`` a new minimum; the values are
    then ranked into ``1..n``.
    """
    if set(word) - {"a", "d"}:
        raise ValueError(f"pattern must be a word over {{a, d}}, got {word!r}")
    values = [0]
    lo = hi = 0
    for letter in word:
        if letter == "a":
            hi += 1
            values.append(hi)
        else:
            lo -= 1
            values.append(lo)
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def _components(G: LabeledGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for root in range(1, G.n + 1):
        if root in seen:
            continue
        seen.add(root)
        comp, queue = [], deque([root])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in sorted(G.adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(G: LabeledGraph) -> bool:
    return len(_components(G)) == 1


def bfs_order(G: LabeledGraph) -> tuple[int, ...]:
    """BFS from vertex 1, restarting at the smallest unseen vertex per component."""
    return tuple(v for comp in _components(G) for v in comp)


def bipartition(G: LabeledGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split a connected graph into independent sets ``(A, B)`` with ``1 in A``.

    Returns ``None`` when the graph has an odd cycle.

    Raises:
        ValueError: if ``G`` is disconnected.
    """
    if not is_connected(G):
        raise ValueError("bipartition requires a connected graph")
    side = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in G.adjacency[v]:
            if w not in side:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                return None
    A = frozenset(v for v, s in side.items() if s == 0)
    B = frozenset(v for v, s in side.items() if s == 1)
    return A, B


@lru_cache(maxsize=4096)
def _deletion_contraction(n: int, edges: frozenset[frozenset[int]], k: int) -> int:
    if not edges:
        return k**n
    e = min(edges, key=sorted)
    u, v = sorted(e)
    deleted = edges - {e}
    # contract v into u; parallel edges collapse because we keep a set
    contracted = frozenset(
        frozenset(u if x == v else x for x in f) for f in deleted
    )
    contracted = frozenset(f for f in contracted if len(f) == 2)
    return _deletion_contraction(n, deleted, k) - _deletion_contraction(n - 1, contracted, k)


def chromatic_polynomial_value(G: LabeledGraph, k: int) -> int:
    """Number of proper colorings of ``G`` with colors ``1..k`` (deletion-contraction)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    edges = frozenset(frozenset(e) for e in G.edges)
    return _deletion_contraction(G.n, edges, k)


def random_tree(n: int, rng) -> LabeledGraph:
    """Uniform random labeled tree on ``[n]`` via a Prüfer sequence."""
    if n == 1:
        return LabeledGraph(1, ())
    if n == 2:
        return LabeledGraph(2, ((1, 2),))
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return LabeledGraph.from_edges(n, edges)


def parse_graph_text(text: str) -> LabeledGraph:
    """Parse the plain-text graph format.

    Accepted forms::

        n=4            path: 3 4 1 2        star: n=5 center=3
        1 2
        2 3
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph description")
    head = lines[0]
    if head.startswith("path:"):
        if len(lines) > 1:
            raise ValueError("unexpected lines after path description")
        tokens = head[len("path:"):].replace(",", " ").split()
        try:
            return make_path([int(t) for t in tokens])
        except ValueError as exc:
            raise ValueError(f"bad path description: {exc}") from None
    if head.startswith("star:"):
        fields = dict(_key_value(tok) for tok in head[len("star:"):].split())
        if set(fields) != {"n", "center"} or len(lines) > 1:
            raise ValueError("star description must be 'star: n=<int> center=<int>'")
        return make_star(fields["n"], fields["center"])
    key, n = _key_value(head)
    if key != "n":
        raise ValueError(f"first line must be 'n=<int>', got {head!r}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must hold two vertices, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"non-integer vertex in {ln!r}") from None
    return LabeledGraph.from_edges(n, edges)


def _key_value(token: str) -> tuple[str, int]:
    key, sep, value = token.partition("=")
    if not sep:
        raise ValueError(f"expected key=value, got {token!r}")
    try:
        return key.strip(), int(value)
    except ValueError:
        raise ValueError(f"non-integer value in {token!r}") from None


def format_graph_text(G: LabeledGraph) -> str:
    if G.order is not None:
        return "path: " + " ".join(map(str, G.order)) + "\n"
    return f"n={G.n}\n" + "".join(f"{i} {j}\n" for i, j in G.edges)
