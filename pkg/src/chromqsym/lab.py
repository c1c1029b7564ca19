"""Executable versions of the non-symmetry arguments for labeled paths, and
exhaustive checks of the path, star and bipartite classification results.

Tableau sets are only materialized for small ribbons. Membership is always
re-checked against the definitions: maximal ascent is tested with the engine
(``asc == |E|`` on an actual labeled path) and cross-checked against the
row/column characterization.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from chromqsym.engine import ascent_number, cqf, default_workers, palette_coefficient
from chromqsym.graph import (
    LabeledGraph,
    bipartition,
    is_connected,
    make_star,
    random_tree,
    swap_pattern,
)
from chromqsym.qsym import Composition, QPolynomial, is_palindromic, is_symmetric
from chromqsym.ribbon import (
    RibbonDiagram,
    RibbonTableau,
    coloring_from_tableau,
    corners,
    find_subribbon,
    max_ascent_characterization,
    path_for,
    reflect,
    regular_subribbons,
)


class HypothesisError(ValueError):
    """An input does not satisfy the hypotheses an operation needs."""


class VerificationError(AssertionError):
    """A checked claim failed on a concrete instance."""


# ---------------------------------------------------------------------------
# tableau enumeration and membership
# ---------------------------------------------------------------------------

def palette_word(palette: Sequence[int]) -> tuple[int, ...]:
    """Colors with multiplicity, e.g. ``(2, 1) -> (1, 1, 2)``."""
    return tuple(c for c, mult in enumerate(palette, start=1) for _ in range(mult))


def increasing_fillings(
    R: RibbonDiagram, palette: Sequence[int], weak_columns: bool = False
) -> Iterator[RibbonTableau]:
    """Fillings with the exact palette whose rows strictly increase rightward and
    whose columns increase downward (weakly if ``weak_columns``).

    In a ribbon every adjacent pair is consecutive in ribbon order, so each
    cell only has to be compared with the one before it.
    """
    counts = list(palette)
    word = R.pattern
    colors = [0] * R.n

    def walk(i: int):
        if i == R.n:
            yield RibbonTableau(R, tuple(colors))
            return
        for col in range(1, len(counts) + 1):
            if not counts[col - 1]:
                continue
            if i:
                prev = colors[i - 1]
                if word[i - 1] == "a" and not col > prev:
                    continue
                if word[i - 1] == "d" and not (col <= prev if weak_columns else col < prev):
                    continue
            counts[col - 1] -= 1
            colors[i] = col
            yield from walk(i + 1)
            counts[col - 1] += 1

    yield from walk(0)


def has_max_ascents(T: RibbonTableau) -> bool:
    """Proper and ``asc == |E|`` on a labeled path with this ribbon.

    Raises if the engine's count disagrees with the row/column characterization.
    """
    if not T.is_proper():
        return False
    P = path_for(T.diagram)
    by_engine = ascent_number(P, coloring_from_tableau(P, T)) == P.m
    if by_engine != max_ascent_characterization(T):
        raise VerificationError(f"ascent characterizations disagree on {T.compact()}")
    return by_engine


def _has_palette(T: RibbonTableau, palette: Sequence[int]) -> bool:
    return T.palette() == tuple(palette)


def _is_bprime(T: RibbonTableau, palette: Sequence[int]) -> bool:
    c = T.colors
    return (
        _has_palette(T, palette)
        and all(c[a] < c[b] for a, b in T.horizontal_pairs())
        and all(c[a] <= c[b] for a, b in T.vertical_pairs())
    )


# ---------------------------------------------------------------------------
# stacked rows: the zeta bijection
# ---------------------------------------------------------------------------

def is_stacked_rows(R: RibbonDiagram) -> bool:
    return len(R.composition) >= 2 and all(part >= 2 for part in R.composition)


def _require_stacked(R: RibbonDiagram) -> None:
    if not is_stacked_rows(R):
        raise HypothesisError(f"{R.composition} is not a stack of >= 2 rows of length >= 2")


def b_interval(R: RibbonDiagram, i: int) -> range:
    """Admissible ``b`` for adjacent rows ``i, i+1`` (1-based): ``[r, n-k-s+2]``."""
    alpha, n = R.composition, R.n
    k = len(alpha)
    if not 1 <= i < k:
        raise HypothesisError(f"row index {i} must lie in 1..{k - 1}")
    r, s = alpha[i - 1], alpha[i]
    return range(r, n - k - s + 2 + 1)


def admissible_pairs(R: RibbonDiagram) -> list[tuple[int, int]]:
    """Every ``(i, b)``, smallest ``i`` then smallest ``b`` first."""
    _require_stacked(R)
    return [(i, b) for i in range(1, len(R.composition)) for b in b_interval(R, i)]


def stacked_palettes(R: RibbonDiagram, b: int) -> tuple[Composition, Composition]:
    """Palettes of A, ``(k, 1, ...)``, and of B / B', ``(1^(b-1), k, 1^(n-k-b+1))``."""
    n, k = R.n, len(R.composition)
    return (
        Composition((k,) + (1,) * (n - k)),
        Composition((1,) * (b - 1) + (k,) + (1,) * (n - k - b + 1)),
    )


@dataclass
class ColoringSet:
    role: str
    ribbon: RibbonDiagram
    parameters: dict
    members: list[RibbonTableau] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, T) -> bool:
        return T in set(self.members)


def _check_b(R: RibbonDiagram, b: int, i: int | None) -> None:
    rows = [i] if i is not None else range(1, len(R.composition))
    if not any(b in b_interval(R, j) for j in rows):
        raise HypothesisError(f"b={b} is outside every admissible interval for {R.composition}")


def in_stacked_A(T: RibbonTableau) -> bool:
    R = T.diagram
    A_pal, _ = stacked_palettes(R, 2)
    return _has_palette(T, A_pal) and has_max_ascents(T)


def in_stacked_B(T: RibbonTableau, b: int) -> bool:
    _, B_pal = stacked_palettes(T.diagram, b)
    return _has_palette(T, B_pal) and has_max_ascents(T)


def in_stacked_Bprime(T: RibbonTableau, b: int) -> bool:
    _, B_pal = stacked_palettes(T.diagram, b)
    return _is_bprime(T, B_pal)


def stacked_sets(R: RibbonDiagram, i: int, b: int) -> dict[str, ColoringSet]:
    """Materialize A, B and B' for the stacked-rows argument."""
    _require_stacked(R)
    if b not in b_interval(R, i):
        raise HypothesisError(f"b={b} not in {b_interval(R, i)} for rows {i},{i + 1}")
    A_pal, B_pal = stacked_palettes(R, b)
    params = {"k": len(R.composition), "b": b, "rows": (i, i + 1)}
    A = [T for T in increasing_fillings(R, A_pal) if in_stacked_A(T)]
    B = [T for T in increasing_fillings(R, B_pal) if in_stacked_B(T, b)]
    Bp = [T for T in increasing_fillings(R, B_pal, weak_columns=True) if in_stacked_Bprime(T, b)]
    return {
        "A": ColoringSet("A", R, dict(params, palette=A_pal), A),
        "B": ColoringSet("B", R, dict(params, palette=B_pal), B),
        "Bprime": ColoringSet("Bprime", R, dict(params, palette=B_pal), Bp),
    }


def _rebuild(R: RibbonDiagram, rows: list[Sequence[int]]) -> RibbonTableau:
    return RibbonTableau(R, tuple(c for row in rows for c in row))


def zeta(T: RibbonTableau, b: int, i: int | None = None) -> RibbonTableau:
    """In each row without ``b``, turn the 1 into ``b`` and re-sort the row."""
    R = T.diagram
    _require_stacked(R)
    _check_b(R, b, i)
    if not in_stacked_A(T):
        raise HypothesisError(f"{T.compact()} is not in A")
    rows = [row if b in row else sorted(b if c == 1 else c for c in row) for row in T.rows()]
    out = _rebuild(R, rows)
    if not in_stacked_Bprime(out, b):
        raise VerificationError(f"zeta({T.compact()}) = {out.compact()} left B'")
    return out


def zeta_inverse(T: RibbonTableau, b: int, i: int | None = None) -> RibbonTableau:
    """In each row without 1, turn the ``b`` into 1 and re-sort the row."""
    R = T.diagram
    _require_stacked(R)
    _check_b(R, b, i)
    if not in_stacked_Bprime(T, b):
        raise HypothesisError(f"{T.compact()} is not in B'")
    rows = [row if 1 in row else sorted(1 if c == b else c for c in row) for row in T.rows()]
    out = _rebuild(R, rows)
    if not in_stacked_A(out):
        raise VerificationError(f"zeta^-1({T.compact()}) = {out.compact()} left A")
    return out


def bprime_minus_b_witness(R: RibbonDiagram, i: int, b: int) -> RibbonTableau:
    """A member of B' that is not proper: ``b`` on both sides of the column
    joining rows ``i`` and ``i + 1``."""
    _require_stacked(R)
    interval = b_interval(R, i)
    assert len(interval) > 0, "empty b-interval contradicts the stacked-rows hypothesis"
    if b not in interval:
        raise HypothesisError(f"b={b} not in [{interval.start}, {interval.stop - 1}]")
    alpha, n, k = R.composition, R.n, len(R.composition)
    r, s = alpha[i - 1], alpha[i]
    top = n - k + 1
    rows: list[list[int] | None] = [None] * k
    rows[i - 1] = list(range(1, r)) + [b]
    rows[i] = [b] + list(range(top - s + 2, top + 1))
    used = set(rows[i - 1]) | set(rows[i])
    spare = iter(sorted(set(range(1, top + 1)) - used - {b}))
    # every other row holds one b; since each row contains b, any split of
    # the spare colors keeps the joining columns weakly increasing
    for j in range(k):
        if rows[j] is None:
            rows[j] = sorted([b] + [next(spare) for _ in range(alpha[j] - 1)])
    out = _rebuild(R, rows)
    if not in_stacked_Bprime(out, b) or in_stacked_B(out, b):
        raise VerificationError(f"witness {out.compact()} is not in B' minus B")
    return out


# ---------------------------------------------------------------------------
# regular ribbons: the psi injection
# ---------------------------------------------------------------------------

def has_113_family(R: RibbonDiagram) -> bool:
    """Contains (1,1,3), begins with (1,3), or ends with (1,1,2)."""
    return bool(
        find_subribbon(R, (1, 1, 3))
        or find_subribbon(R, (1, 3), "begins")
        or find_subribbon(R, (1, 1, 2), "ends")
    )


def psi_hypotheses(R: RibbonDiagram) -> bool:
    return not has_113_family(R) and bool(regular_subribbons(R))


def _require_psi(R: RibbonDiagram) -> None:
    if not psi_hypotheses(R):
        raise HypothesisError(f"{R.composition} fails the regular-ribbon hypotheses")


def regular_palettes(R: RibbonDiagram) -> tuple[Composition, Composition]:
    """Palettes ``(k, 1, ...)`` and ``(1, k, 1, ...)`` with ``k`` = number of LU corners."""
    n, k = R.n, len(corners(R).lu)
    return Composition((k,) + (1,) * (n - k)), Composition((1, k) + (1,) * (n - k - 1))


def in_regular_A(T: RibbonTableau) -> bool:
    return _has_palette(T, regular_palettes(T.diagram)[0]) and has_max_ascents(T)


def in_regular_B(T: RibbonTableau) -> bool:
    return _has_palette(T, regular_palettes(T.diagram)[1]) and has_max_ascents(T)


def regular_sets(R: RibbonDiagram) -> dict[str, ColoringSet]:
    _require_psi(R)
    A_pal, B_pal = regular_palettes(R)
    k = A_pal[0]
    A = [T for T in increasing_fillings(R, A_pal) if in_regular_A(T)]
    B = [T for T in increasing_fillings(R, B_pal) if in_regular_B(T)]
    return {
        "A": ColoringSet("A", R, {"k": k, "palette": A_pal}, A),
        "B": ColoringSet("B", R, {"k": k, "palette": B_pal}, B),
    }


def psi(T: RibbonTableau) -> RibbonTableau:
    """Recolor every LU corner holding 2 with 1."""
    R = T.diagram
    _require_psi(R)
    if not in_regular_B(T):
        raise HypothesisError(f"{T.compact()} is not in B")
    lu = corners(R).lu
    out = T.replace({i: 1 for i in lu if T.colors[i] == 2})
    if not in_regular_A(out):
        raise VerificationError(f"psi({T.compact()}) = {out.compact()} left A")
    return out


def _neighbors(R: RibbonDiagram, i: int) -> list[int]:
    return [j for j in (i - 1, i + 1) if 0 <= j < R.n]


def two_next_to_ones(T: RibbonTableau) -> list[int]:
    """How many 1s are adjacent to each cell colored 2."""
    return [
        sum(1 for j in _neighbors(T.diagram, i) if T.colors[j] == 1)
        for i, c in enumerate(T.colors)
        if c == 2
    ]


def psi_nonsurjectivity_witness(
    R: RibbonDiagram, site: int | None = None, base: RibbonTableau | None = None
) -> RibbonTableau:
    """A member of A whose 2 touches two 1s, hence outside the image of psi.

    The regular (2,1) sub-ribbon starting at cell ``site`` (default: the first
    one) gets 1 on its LU corners and 2 on its RL corner; all LU corners of
    ``R`` get 1. The other cells receive ``3, 4, ...`` along a linear
    extension of the row/column order: the relative order those cells have in
    ``base`` (a member of A) if given, else smallest cell index first.
    """
    _require_psi(R)
    sites = regular_subribbons(R)
    s = sites[0] if site is None else site
    if s not in sites:
        raise HypothesisError(f"no regular (2,1) sub-ribbon starts at cell {s}")
    fixed = {i: 1 for i in corners(R).lu}
    # inside the sub-ribbon: bottom-left and top cells are LU, bottom-right is RL
    if fixed.get(s) != 1 or fixed.get(s + 2) != 1:
        raise VerificationError("sub-ribbon LU corners are not LU corners of the ribbon")
    fixed[s + 1] = 2
    rest = [i for i in range(R.n) if i not in fixed]
    if base is not None:
        if base.diagram != R or not in_regular_A(base):
            raise HypothesisError("base must be a member of A on the same ribbon")
        ranked = sorted(rest, key=lambda i: base.colors[i])
    else:
        ranked = _linear_extension(R, rest)
    colors = dict(fixed)
    colors.update({i: 3 + rank for rank, i in enumerate(ranked)})
    out = RibbonTableau(R, tuple(colors[i] for i in range(R.n)))
    if not in_regular_A(out):
        raise VerificationError(f"witness {out.compact()} is not in A")
    if 2 not in two_next_to_ones(out):
        raise VerificationError(f"witness {out.compact()} has no 2 between two 1s")
    return out


def _linear_extension(R: RibbonDiagram, cells: list[int]) -> list[int]:
    """Order ``cells`` so every smaller-must-be-first constraint between them holds."""
    pool = set(cells)
    before: dict[int, set[int]] = {i: set() for i in cells}
    word = R.pattern
    for i in range(R.n - 1):
        lo, hi = (i, i + 1) if word[i] == "a" else (i + 1, i)
        if lo in pool and hi in pool:
            before[hi].add(lo)
    out: list[int] = []
    while before:
        ready = min(i for i, deps in before.items() if not deps)
        out.append(ready)
        del before[ready]
        for deps in before.values():
            deps.discard(ready)
    return out


# ---------------------------------------------------------------------------
# corner counts and the case analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CornerVerdict:
    lu: int
    rl: int
    alpha: Composition
    beta: Composition
    top_alpha: int
    top_beta: int

    @property
    def nonpalindromic(self) -> bool:
        return self.top_alpha > 0 and self.top_beta == 0


def check_corner_proposition(R: RibbonDiagram) -> CornerVerdict:
    """Compare ``[q^|E|]`` of ``M_(k,1,...,1,j)`` and ``M_(j,1,...,1,k)``."""
    cs = corners(R)
    k, j = len(cs.lu), len(cs.rl)
    if k == j:
        raise HypothesisError(f"{R.composition} has equally many LU and RL corners")
    alpha = Composition((k,) + (1,) * (R.n - k - j) + (j,))
    beta = alpha.reversed()
    P = path_for(R)
    top_a = palette_coefficient(P, alpha)[P.m]
    top_b = palette_coefficient(P, beta)[P.m]
    verdict = CornerVerdict(k, j, alpha, beta, top_a, top_b)
    if not verdict.nonpalindromic:
        raise VerificationError(f"corner argument fails on {R.composition}: {verdict}")
    return verdict


CASES = ("corner-mismatch", "stacked-rows", "113-family", "regular")


@dataclass(frozen=True)
class CaseLabel:
    case: str
    orientation: str  # "direct" or "reflected"

    def __str__(self) -> str:
        return self.case if self.orientation == "direct" else f"{self.case} (reflected)"


class IncompleteCaseAnalysis(VerificationError):
    pass


def _case_predicates(R: RibbonDiagram) -> list[str]:
    cs = corners(R)
    hits = []
    if len(cs.lu) != len(cs.rl):
        hits.append("corner-mismatch")
    if is_stacked_rows(R):
        hits.append("stacked-rows")
    if has_113_family(R):
        hits.append("113-family")
    if psi_hypotheses(R):
        hits.append("regular")
    return hits


def main_theorem_case_analysis(R: RibbonDiagram) -> list[CaseLabel]:
    """Every case whose hypotheses ``R`` or its reflection satisfies."""
    alpha = R.composition
    if len(alpha) == 1 or len(alpha) == R.n:
        raise HypothesisError("the natural ribbons (n) and (1^n) are not covered")
    labels = [CaseLabel(c, "direct") for c in _case_predicates(R)]
    labels += [CaseLabel(c, "reflected") for c in _case_predicates(reflect(R))]
    if not labels:
        raise IncompleteCaseAnalysis(f"no case applies to {alpha}")
    return labels


def predicted_pair(R: RibbonDiagram, case: str) -> tuple[Composition, Composition]:
    """``(alpha, beta)``, rearrangements of each other, whose top q-coefficients
    the case's argument separates on ``R`` itself."""
    n = R.n
    cs = corners(R)
    k = len(cs.lu)
    if case == "corner-mismatch":
        j = len(cs.rl)
        alpha = Composition((k,) + (1,) * (n - k - j) + (j,))
        return alpha, alpha.reversed()
    if case == "stacked-rows":
        i, b = admissible_pairs(R)[0]
        return stacked_palettes(R, b)
    if case == "113-family":
        return (
            Composition((k + 1,) + (1,) * (n - k - 1)),
            Composition((1, k + 1) + (1,) * (n - k - 2)),
        )
    if case == "regular":
        return regular_palettes(R)
    raise ValueError(f"unknown case {case!r}")


def confirm_case(R: RibbonDiagram, label: CaseLabel) -> tuple[int, int]:
    """Engine values ``([q^|E|]c_alpha, [q^|E|]c_beta)`` for the predicted pair;
    raises unless they differ in the predicted direction."""
    S = R if label.orientation == "direct" else reflect(R)
    alpha, beta = predicted_pair(S, label.case)
    P = path_for(S)
    a, b = palette_coefficient(P, alpha)[P.m], palette_coefficient(P, beta)[P.m]
    ok = (a == 0 < b) if label.case == "113-family" else (a > b)
    if not ok:
        raise VerificationError(f"{label} on {R.composition}: top coefficients {a}, {b}")
    return a, b


# ---------------------------------------------------------------------------
# exhaustive path classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PatternVerdict:
    pattern: str
    composition: Composition
    symmetric: bool
    palindromic: bool
    symmetry_witness: tuple[Composition, Composition] | None
    palindromic_witness: tuple[Composition, int] | None
    isomorphic_to: str

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "composition": list(self.composition),
            "symmetric": self.symmetric,
            "palindromic": self.palindromic,
            "witness": None if self.symmetry_witness is None else [list(a) for a in self.symmetry_witness],
            "palindromic_witness": None
            if self.palindromic_witness is None
            else {"alpha": list(self.palindromic_witness[0]), "power": self.palindromic_witness[1]},
            "isomorphic_to": self.isomorphic_to,
        }


@dataclass
class ClassificationReport:
    n: int
    rows: list[PatternVerdict]

    @property
    def symmetric_patterns(self) -> list[str]:
        return [r.pattern for r in self.rows if r.symmetric]

    @property
    def theorem_holds(self) -> bool:
        natural = {"a" * (self.n - 1), "d" * (self.n - 1)}
        return set(self.symmetric_patterns) == natural and all(
            r.palindromic for r in self.rows if r.symmetric
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern_count": len(self.rows),
            "symmetric_count": len(self.symmetric_patterns),
            "theorem_holds": self.theorem_holds,
            "patterns": [r.to_dict() for r in self.rows],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        width = max(self.n - 1, len("pattern"))
        lines = [f"{'pattern':<{width}}  {'composition':<18} sym  pal  witness"]
        for r in self.rows:
            wit = "" if r.symmetry_witness is None else f"{r.symmetry_witness[0]}/{r.symmetry_witness[1]}"
            lines.append(
                f"{r.pattern or '-':<{width}}  {str(r.composition):<18} "
                f"{'yes' if r.symmetric else 'no ':<4} {'yes' if r.palindromic else 'no ':<4} {wit}"
            )
        lines.append(
            f"{len(self.symmetric_patterns)} of {len(self.rows)} patterns symmetric; "
            f"natural-labeling classification {'holds' if self.theorem_holds else 'FAILS'}"
        )
        return "\n".join(lines)


def _pattern_verdict(pattern: str) -> PatternVerdict:
    R = RibbonDiagram.from_pattern(pattern)
    P = path_for(R)
    Q = cqf(P, n_jobs=1)
    sym, sym_w = is_symmetric(Q)
    pal, pal_w = is_palindromic(Q, P.m)
    return PatternVerdict(
        pattern, R.composition, sym, pal, sym_w, pal_w, swap_pattern(pattern)[::-1]
    )


def classify_paths(n: int, n_jobs: int | None = None, max_n: int = 10, strict: bool = False) -> ClassificationReport:
    """CQF verdicts for each of the ``2**(n-1)`` ad-patterns of length ``n-1``.

    ``isomorphic_to`` names the pattern of the reversed path, which is the
    same labeled graph. With ``strict`` a failed classification raises.
    """
    if not 2 <= n <= max_n:
        raise ValueError(f"n must lie in 2..{max_n}")
    patterns = ["".join(w) for w in product("ad", repeat=n - 1)]
    workers = default_workers() if n_jobs is None else n_jobs
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_pattern_verdict, patterns))
    else:
        rows = [_pattern_verdict(w) for w in patterns]
    report = ClassificationReport(n, rows)
    if strict and not report.theorem_holds:
        raise VerificationError(f"symmetric patterns for n={n}: {report.symmetric_patterns}")
    return report


# ---------------------------------------------------------------------------
# stars and bipartite graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarRow:
    center: int
    palindromic: bool
    symmetric: bool
    c_1_rest: QPolynomial
    c_rest_1: QPolynomial
    expected_palindromic: bool
    ok: bool


def verify_star(n: int) -> list[StarRow]:
    """One row per center label ``j``.

    Checked: palindromic iff ``n`` odd and ``j = (n+1)/2``; never symmetric
    for ``n >= 4``; ``c_(1,n-1) = q^(n-j)`` and ``c_(n-1,1) = q^(j-1)``.
    """
    if n < 3:
        raise ValueError("stars need n >= 3")
    rows = []
    for j in range(1, n + 1):
        G = make_star(n, j)
        Q = cqf(G, n_jobs=1)
        pal = is_palindromic(Q, G.m)[0]
        sym = is_symmetric(Q)[0]
        expected = n % 2 == 1 and j == (n + 1) // 2
        c1, c2 = Q[(1, n - 1)], Q[(n - 1, 1)]
        ok = (
            pal == expected
            and (n < 4 or not sym)
            and c1 == QPolynomial.monomial(n - j)
            and c2 == QPolynomial.monomial(j - 1)
        )
        rows.append(StarRow(j, pal, sym, c1, c2, expected, ok))
    return rows


@dataclass(frozen=True)
class BipartiteRow:
    graph: LabeledGraph
    status: str  # "checked" or "skipped"
    note: str = ""
    sizes: tuple[int, int] | None = None
    r: int | None = None
    s: int | None = None
    palindromic: bool | None = None
    ok: bool = True


def verify_bipartite(graphs: Iterable[LabeledGraph]) -> list[BipartiteRow]:
    """Check non-palindromicity for connected bipartite graphs with an odd edge
    count and unequal sides, including ``c_(a,b) = q^r``, ``c_(b,a) = q^s``
    and ``r + s = |E|``. Other graphs are skipped with a note."""
    rows = []
    for G in graphs:
        if not is_connected(G):
            rows.append(BipartiteRow(G, "skipped", "disconnected"))
            continue
        sides = bipartition(G)
        if sides is None:
            rows.append(BipartiteRow(G, "skipped", "not bipartite"))
            continue
        A, B = sides
        if G.m % 2 == 0:
            rows.append(BipartiteRow(G, "skipped", "even number of edges", (len(A), len(B))))
            continue
        if len(A) == len(B):
            rows.append(BipartiteRow(G, "skipped", "equal bipartition", (len(A), len(B))))
            continue
        a, b = len(A), len(B)
        r = sum(1 for i, j in G.edges if (i in A and j in B))
        s = sum(1 for i, j in G.edges if (i in B and j in A))
        Q = cqf(G, n_jobs=1)
        pal = is_palindromic(Q, G.m)[0]
        ok = (
            not pal
            and Q[(a, b)] == QPolynomial.monomial(r)
            and Q[(b, a)] == QPolynomial.monomial(s)
            and r + s == G.m
        )
        rows.append(BipartiteRow(G, "checked", "", (a, b), r, s, pal, ok))
    return rows


def random_trees_unequal_bipartition(
    count: int, sizes: Sequence[int] = (4, 6, 8, 10), seed: int = 0
) -> list[LabeledGraph]:
    """Random labeled trees with sizes drawn from ``sizes`` and unequal sides."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        T = random_tree(rng.choice(list(sizes)), rng)
        A, B = bipartition(T)
        if len(A) != len(B):
            out.append(T)
    return out


def stacked_rows_report(R: RibbonDiagram, pairs: Iterable[tuple[int, int]] | None = None) -> list[dict]:
    """Full verification of the zeta argument for each ``(i, b)``."""
    results = []
    for i, b in admissible_pairs(R) if pairs is None else pairs:
        sets = stacked_sets(R, i, b)
        A, B, Bp = sets["A"].members, sets["B"].members, sets["Bprime"].members
        Bp_set = set(Bp)
        images = [zeta(T, b, i) for T in A]
        bijective = len(set(images)) == len(A) and set(images) == Bp_set
        round_trip = all(zeta_inverse(Z, b, i) == T for T, Z in zip(A, images))
        round_trip_back = all(zeta(zeta_inverse(U, b, i), b, i) == U for U in Bp)
        witness = bprime_minus_b_witness(R, i, b)
        results.append(
            {
                "i": i,
                "b": b,
                "A": len(A),
                "B": len(B),
                "Bprime": len(Bp),
                "bijective": bijective and round_trip and round_trip_back,
                "B_subset": set(B) <= Bp_set,
                "witness": witness,
                "witness_outside_B": witness in Bp_set and witness not in set(B),
            }
        )
    return results
