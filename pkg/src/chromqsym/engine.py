"""Chromatic quasisymmetric functions by palette-constrained enumeration.

``[M_alpha] X(G; x, q)`` counts proper colorings that use color ``i`` exactly
``alpha[i-1]`` times, weighted by ``q**asc``. Each palette is an independent
work unit. Two routes compute it:

* ``oracle``: every arrangement of the palette's color multiset is generated
  and filtered for properness; ascents are counted from scratch.
* ``fast``: backtracking along a fixed vertex order with incremental
  properness and ascent counts, a palette-feasibility cut, and memoization
  keyed on the colors of the boundary between colored and uncolored vertices.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Mapping, Sequence

from sympy.utilities.iterables import multiset_permutations

from chromqsym.graph import LabeledGraph, bfs_order
from chromqsym.qsym import Composition, QPolynomial, QSymExpansion, compositions_of

__all__ = [
    "ascent_number",
    "descent_number",
    "vertex_order",
    "colorings_with_palette",
    "palette_coefficient",
    "cqf",
    "cqf_fast",
    "cqf_oracle",
    "cqf_descent",
    "default_workers",
]

Coloring = Mapping[int, int]
WORKERS_ENV = "CHROMQSYM_WORKERS"


def _as_map(c) -> Mapping[int, int]:
    if isinstance(c, Mapping):
        return c
    return {v: col for v, col in enumerate(c, start=1)}


def ascent_number(G: LabeledGraph, c) -> int:
    """Edges ``ij`` with ``i < j`` and ``c(i) < c(j)``.

    ``c`` is a vertex-to-color mapping or a sequence indexed by ``vertex - 1``.
    """
    c = _as_map(c)
    return sum(1 for i, j in G.edges if c[i] < c[j])


def descent_number(G: LabeledGraph, c) -> int:
    c = _as_map(c)
    return sum(1 for i, j in G.edges if c[i] > c[j])


def vertex_order(G: LabeledGraph) -> tuple[int, ...]:
    """Path-position order for paths, BFS order from vertex 1 otherwise."""
    return G.order if G.order is not None else bfs_order(G)


class _Plan:
    """Precomputed visiting data for one graph."""

    def __init__(self, G: LabeledGraph):
        order = vertex_order(G)
        pos = {v: t for t, v in enumerate(order)}
        self.n = G.n
        self.order = order
        # earlier[t]: (position of an already-placed neighbor, True if an
        # ascent needs that neighbor's color below the new one)
        self.earlier = []
        self.later = []
        for t, v in enumerate(order):
            nbrs = G.adjacency[v]
            self.earlier.append(tuple(sorted((pos[u], u < v) for u in nbrs if pos[u] < t)))
            self.later.append(tuple(sorted(pos[u] for u in nbrs if pos[u] > t)))
        # frontier[t]: placed positions (< t) that still have unplaced neighbors
        self.frontier = [
            tuple(p for p in range(t) if any(w >= t for w in self.later[p]))
            for t in range(self.n + 1)
        ]
        # reach[t]: (placed position, its unplaced neighbors) for the frontier
        self.reach = [
            tuple((p, tuple(w for w in self.later[p] if w >= t)) for p in self.frontier[t])
            for t in range(self.n + 1)
        ]

def _feasible(plan: _Plan, t: int, rem: Sequence[int], colors: Sequence[int]) -> bool:
    """Each color still owed must fit on that many unplaced, unblocked vertices.

    Only colors sitting on the frontier can block anything.
    """
    blocked: dict[int, set[int]] = {}
    for p, ws in plan.reach[t]:
        blocked.setdefault(colors[p], set()).update(ws)
    free = plan.n - t
    return all(rem[col] <= free - len(ws) for col, ws in blocked.items())

def colorings_with_palette(G: LabeledGraph, alpha: Sequence[int]) -> Iterator[dict[int, int]]:
    """Stream the proper colorings of ``G`` with palette ``alpha``, each once."""
    alpha = Composition(alpha)
    if alpha.size != G.n:
        raise ValueError(f"palette {alpha} does not sum to n={G.n}")
    plan = _Plan(G)
    n = plan.n
    rem = list(alpha)
    colors = [-1] * n

    def walk(t: int):
        if t == n:
            yield {plan.order[p]: colors[p] + 1 for p in range(n)}
            return
        taken = {colors[p] for p, _ in plan.earlier[t]}
        for col, r in enumerate(rem):
            if not r or col in taken:
                continue
            colors[t] = col
            rem[col] -= 1
            if _feasible(plan, t + 1, rem, colors):
                yield from walk(t + 1)
            rem[col] += 1
        colors[t] = -1

    yield from walk(0)


class _FastSolver:
    """Memoized backtracking for all palettes of one length.

    A subproblem is fixed by the step, the remaining color counts and the
    frontier colors, none of which depend on which palette it came from, so
    palettes of equal length share one memo table. Only the relative order
    of the colors still in play matters, which the memo key exploits.
    """

    def __init__(self, G: LabeledGraph, statistic: str = "asc"):
        self.plan = _Plan(G)
        self.want_ascent = statistic == "asc"
        self.colors = [-1] * self.plan.n
        self.memo: dict = {}

    def __call__(self, alpha: Sequence[int]) -> QPolynomial:
        return QPolynomial(self._solve(0, tuple(alpha)))

    def _key(self, t: int, rem: tuple[int, ...]) -> tuple:
        """Colors that are used up and off the frontier can never matter
        again; drop them and rank the rest so equivalent states coincide."""
        front = [self.colors[p] for p in self.plan.frontier[t]]
        live = [c for c, r in enumerate(rem) if r or c in front]
        rank = {c: i for i, c in enumerate(live)}
        return t, tuple(rem[c] for c in live), tuple(rank[c] for c in front)

    def _solve(self, t: int, rem: tuple[int, ...]) -> tuple[int, ...]:
        plan, colors = self.plan, self.colors
        if t == plan.n:
            return (1,)
        key = self._key(t, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not _feasible(plan, t, rem, colors):
            self.memo[key] = ()
            return ()
        acc: list[int] = []
        prev = plan.earlier[t]
        taken = {colors[p] for p, _ in prev}
        for col, r in enumerate(rem):
            if not r or col in taken:
                continue
            # colors differ (proper), so "not below" means "above"
            rises = sum(1 for p, up in prev if (colors[p] < col) == up)
            k = rises if self.want_ascent else len(prev) - rises
            colors[t] = col
            sub = self._solve(t + 1, rem[:col] + (r - 1,) + rem[col + 1:])
            if len(acc) < len(sub) + k:
                acc.extend([0] * (len(sub) + k - len(acc)))
            for i, x in enumerate(sub):
                acc[i + k] += x
        colors[t] = -1
        out = tuple(acc)
        self.memo[key] = out
        return out


def _oracle_palette(G: LabeledGraph, alpha: Composition, statistic: str) -> QPolynomial:
    word = [color for color, mult in enumerate(alpha, start=1) for _ in range(mult)]
    edges = [(i - 1, j - 1) for i, j in G.edges]
    counts = [0] * (len(edges) + 1)
    for perm in multiset_permutations(word):
        if any(perm[i] == perm[j] for i, j in edges):
            continue
        if statistic == "asc":
            k = sum(1 for i, j in edges if perm[i] < perm[j])
        else:
            k = sum(1 for i, j in edges if perm[i] > perm[j])
        counts[k] += 1
    return QPolynomial(counts)


def palette_coefficient(
    G: LabeledGraph, alpha: Sequence[int], method: str = "fast", statistic: str = "asc"
) -> QPolynomial:
    """``c_alpha(q)``: the independent per-palette work unit."""
    alpha = Composition(alpha)
    if alpha.size != G.n:
        raise ValueError(f"palette {alpha} does not sum to n={G.n}")
    if statistic not in ("asc", "des"):
        raise ValueError(f"unknown statistic {statistic!r}")
    if method == "fast":
        return _FastSolver(G, statistic)(alpha)
    if method == "oracle":
        return _oracle_palette(G, alpha, statistic)
    raise ValueError(f"unknown method {method!r}")


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _task(args) -> list[QPolynomial]:
    G, palettes, method, statistic = args
    if method == "fast":
        solve = _FastSolver(G, statistic)
        return [solve(alpha) for alpha in palettes]
    return [palette_coefficient(G, alpha, method, statistic) for alpha in palettes]


def cqf(
    G: LabeledGraph, method: str = "fast", n_jobs: int | None = None, statistic: str = "asc"
) -> QSymExpansion:
    """``X(G; x, q)`` in the M basis.

    Work is split into one unit per palette length (palettes of equal length
    share the fast solver's memo). ``n_jobs`` fans the units out to worker
    processes; the result is identical to the sequential run.
    """
    if method not in ("fast", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    if statistic not in ("asc", "des"):
        raise ValueError(f"unknown statistic {statistic!r}")
    by_length: dict[int, list[Composition]] = {}
    for alpha in compositions_of(G.n):
        by_length.setdefault(len(alpha), []).append(alpha)
    tasks = [(G, group, method, statistic) for _, group in sorted(by_length.items())]
    workers = default_workers() if n_jobs is None else n_jobs
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_task, tasks))
    elif method == "fast":
        # one process: a single memo serves every palette length
        solve = _FastSolver(G, statistic)
        results = [[solve(alpha) for alpha in group] for _, group, _, _ in tasks]
    else:
        results = [_task(t) for t in tasks]
    coeffs = {}
    for (_, group, _, _), polys in zip(tasks, results):
        coeffs.update(zip(group, polys))
    return QSymExpansion(G.n, coeffs, m=G.m)


def cqf_fast(G: LabeledGraph, n_jobs: int | None = None) -> QSymExpansion:
    return cqf(G, "fast", n_jobs)


def cqf_oracle(G: LabeledGraph, n_jobs: int | None = None) -> QSymExpansion:
    return cqf(G, "oracle", n_jobs)


def cqf_descent(G: LabeledGraph, method: str = "fast", n_jobs: int | None = None) -> QSymExpansion:
    """Like :func:`cqf` but weighting each coloring by ``q**des``."""
    return cqf(G, method, n_jobs, statistic="des")

