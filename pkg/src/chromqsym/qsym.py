"""Compositions, exact q-polynomials and expansions in the monomial
quasisymmetric basis."""
from __future__ import annotations

import json
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping

from chromqsym.validation import check_parts

NEG_INF = float("-inf")


class Composition(tuple):
    """An ordered tuple of positive integers. ``Composition((1, 2)) != Composition((2, 1))``."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]):
        return super().__new__(cls, check_parts(tuple(parts)))

    @property
    def size(self) -> int:
        return sum(self)

    def reversed(self) -> "Composition":
        return Composition(self[::-1])

    def partition_key(self) -> tuple[int, ...]:
        return tuple(sorted(self, reverse=True))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__


def compositions_of(n: int) -> list[Composition]:
    """All ``2**(n-1)`` compositions of ``n``, in lexicographic order of parts."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0, *cuts, n)
            out.append(Composition(b - a for a, b in zip(bounds, bounds[1:])))
    out.sort()
    return out


def reverse(alpha: Composition) -> Composition:
    return Composition(alpha).reversed()


class QPolynomial:
    """Polynomial in ``q`` with exact nonnegative integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are trimmed,
    so the zero polynomial has an empty tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError("coefficients must be nonnegative")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, i: int) -> int:
        """Coefficient of ``q**i`` (zero outside the support)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def __call__(self, q0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def reversal(self, m: int) -> "QPolynomial":
        """``q**m * p(1/q)``; requires ``m >= degree``."""
        if self.degree > m:
            raise ValueError(f"degree {self.degree} exceeds reversal length {m}")
        return QPolynomial(self[m - i] for i in range(m + 1))

    def is_palindromic(self, m: int) -> bool:
        return all(self[i] == self[m - i] for i in range(m + 1))

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            var = "q" if i == 1 else f"q^{i}"
            terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)


class QSymExpansion:
    """``sum_alpha c_alpha(q) M_alpha`` for compositions ``alpha`` of ``n``.

    Absent keys are zero; zero coefficients are dropped on construction. ``m``
    is the edge count of the source graph when known and bounds every degree.
    """

    __slots__ = ("n", "m", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping, m: int | None = None):
        if n < 1:
            raise ValueError("degree n must be positive")
        clean: dict[Composition, QPolynomial] = {}
        for alpha, poly in coeffs.items():
            alpha = Composition(alpha)
            if alpha.size != n:
                raise ValueError(f"composition {alpha} does not sum to {n}")
            if not isinstance(poly, QPolynomial):
                poly = QPolynomial(poly)
            if m is not None and poly.degree > m:
                raise ValueError(f"coefficient of {alpha} has q-degree above {m}")
            if poly:
                clean[alpha] = clean.get(alpha, QPolynomial()) + poly
        self.n = n
        self.m = m
        self._coeffs = dict(sorted(clean.items()))

    def __getitem__(self, alpha) -> QPolynomial:
        return self._coeffs.get(Composition(alpha), QPolynomial())

    def items(self) -> Iterator[tuple[Composition, QPolynomial]]:
        return iter(self._coeffs.items())

    def support(self) -> list[Composition]:
        return list(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QSymExpansion):
            return self.n == other.n and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, tuple(self._coeffs.items())))

    def __add__(self, other: "QSymExpansion") -> "QSymExpansion":
        if self.n != other.n:
            raise ValueError("cannot add expansions of different degrees")
        merged = dict(self._coeffs)
        for alpha, poly in other.items():
            merged[alpha] = merged.get(alpha, QPolynomial()) + poly
        m = self.m if self.m == other.m else None
        return QSymExpansion(self.n, merged, m=m)

    @property
    def q_degree(self) -> int | float:
        return max((p.degree for p in self._coeffs.values()), default=NEG_INF)

    def __repr__(self) -> str:
        return f"QSymExpansion(n={self.n}, m={self.m}, {len(self)} terms)"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"({p})M{a}" for a, p in self._coeffs.items())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "coeffs": [{"alpha": list(a), "poly": list(p.coeffs)} for a, p in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, data: Mapping) -> "QSymExpansion":
        try:
            coeffs = {tuple(t["alpha"]): QPolynomial(t["poly"]) for t in data["coeffs"]}
            return cls(int(data["n"]), coeffs, m=data.get("m"))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed expansion JSON: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "QSymExpansion":
        return cls.from_dict(json.loads(text))


def rho(Q: QSymExpansion) -> QSymExpansion:
    """Send ``M_alpha`` to ``M_{reverse(alpha)}``."""
    return QSymExpansion(Q.n, {a.reversed(): p for a, p in Q.items()}, m=Q.m)


def q_reversal(Q: QSymExpansion, m: int) -> QSymExpansion:
    """Replace every coefficient ``c(q)`` by ``q**m * c(1/q)``."""
    return QSymExpansion(Q.n, {a: p.reversal(m) for a, p in Q.items()}, m=m)


def is_palindromic(Q: QSymExpansion, m: int | None = None):
    """Whether the ``q**i`` and ``q**(m-i)`` coefficients agree for every ``i``.

    Returns ``(True, None)`` or ``(False, (alpha, i))`` where ``i`` is the
    smallest offending power for the first offending ``alpha``.
    """
    if m is None:
        m = Q.m
    if m is None:
        raise ValueError("edge count m is required")
    if Q.q_degree > m:
        raise ValueError(f"expansion has q-degree {Q.q_degree} > m={m}")
    for alpha, poly in Q.items():
        for i in range(m + 1):
            if poly[i] != poly[m - i]:
                return False, (alpha, i)
    return True, None


def is_symmetric(Q: QSymExpansion):
    """Whether coefficients agree across every rearrangement class.

    Returns ``(True, None)`` or ``(False, (alpha, beta))`` with ``alpha`` the
    lexicographically first member of its class.
    """
    classes: dict[tuple[int, ...], list[Composition]] = {}
    for alpha in compositions_of(Q.n):
        classes.setdefault(alpha.partition_key(), []).append(alpha)
    # iterate classes by their first member so the witness is deterministic
    for members in sorted(classes.values()):
        first = Q[members[0]]
        for beta in members[1:]:
            if Q[beta] != first:
                return False, (members[0], beta)
    return True, None


def specialize_q(Q: QSymExpansion, q0: int) -> dict[Composition, int]:
    return {a: p(q0) for a, p in Q.items()}


def chromatic_from_expansion(Q: QSymExpansion, k: int) -> int:
    """Set ``x_1 = ... = x_k = 1`` and ``q = 1``: ``M_alpha`` becomes ``C(k, len(alpha))``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(p(1) * comb(k, len(a)) for a, p in Q.items())
