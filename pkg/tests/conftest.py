from collections import Counter
from itertools import permutations, product

from chromqsym.graph import LabeledGraph

ACCEPTANCE_LINES: list[str] = []


def brute_force_colorings(G: LabeledGraph, k: int) -> int:
    """Proper colorings with colors 1..k, by listing all k**n maps."""
    return sum(
        1
        for c in product(range(1, k + 1), repeat=G.n)
        if all(c[i - 1] != c[j - 1] for i, j in G.edges)
    )


def brute_force_cqf(G: LabeledGraph) -> dict[tuple[int, ...], dict[int, int]]:
    """``{palette: {ascents: count}}`` from all ``n**n`` colorings whose colors
    form an initial segment ``1..l``."""
    out: dict[tuple[int, ...], Counter] = {}
    for c in product(range(1, G.n + 1), repeat=G.n):
        used = set(c)
        if used != set(range(1, len(used) + 1)):
            continue
        if any(c[i - 1] == c[j - 1] for i, j in G.edges):
            continue
        palette = tuple(c.count(x) for x in range(1, len(used) + 1))
        asc = sum(1 for i, j in G.edges if c[i - 1] < c[j - 1])
        out.setdefault(palette, Counter())[asc] += 1
    return {a: dict(v) for a, v in out.items()}


def as_table(Q) -> dict[tuple[int, ...], dict[int, int]]:
    return {tuple(a): {i: x for i, x in enumerate(p.coeffs) if x} for a, p in Q.items()}


def all_labelings(n: int):
    return permutations(range(1, n + 1))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
