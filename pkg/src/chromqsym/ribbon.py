"""Ribbon diagrams of labeled paths and the tableaux that encode their colorings.

Cells are ``(row, column)`` pairs, 1-based, with row 1 at the bottom. Cell
indices (0-based) follow the ribbon from the bottom-left box, so cell ``i`` is
path position ``i + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from chromqsym.graph import LabeledGraph, make_path, pattern_to_labeling, swap_pattern
from chromqsym.qsym import Composition

ANCHORS = ("anywhere", "begins", "ends")


def composition_to_pattern(alpha: Sequence[int]) -> str:
    alpha = Composition(alpha)
    return "d".join("a" * (part - 1) for part in alpha)


def pattern_to_composition(word: str) -> Composition:
    if set(word) - {"a", "d"}:
        raise ValueError(f"pattern must be a word over {{a, d}}, got {word!r}")
    return Composition(len(run) + 1 for run in word.split("d"))


class Corners(NamedTuple):
    lu: tuple[int, ...]
    rl: tuple[int, ...]


@dataclass(frozen=True)
class RibbonDiagram:
    composition: Composition

    def __post_init__(self):
        object.__setattr__(self, "composition", Composition(self.composition))

    @classmethod
    def from_pattern(cls, word: str) -> "RibbonDiagram":
        return cls(pattern_to_composition(word))

    @property
    def n(self) -> int:
        return self.composition.size

    @property
    def pattern(self) -> str:
        return composition_to_pattern(self.composition)

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        out = []
        col = 1
        for row, length in enumerate(self.composition, start=1):
            out.extend((row, col + j) for j in range(length))
            col += length - 1
        return tuple(out)

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {cell: i for i, cell in enumerate(self.cells)}

    def row_slices(self) -> list[range]:
        """Cell index ranges of each row, bottom to top."""
        out, start = [], 0
        for length in self.composition:
            out.append(range(start, start + length))
            start += length
        return out

    def row_of(self, i: int) -> int:
        return self.cells[i][0]

    def __str__(self) -> str:
        return render(self)


def ribbon_from_pattern(word: str) -> RibbonDiagram:
    return RibbonDiagram.from_pattern(word)


def reflect(R: RibbonDiagram) -> RibbonDiagram:
    """Reflect across the slope-1 diagonal through the bottom-left box."""
    return RibbonDiagram.from_pattern(swap_pattern(R.pattern))


def path_for(R: RibbonDiagram) -> LabeledGraph:
    """A labeled path whose ribbon diagram is ``R``."""
    return make_path(pattern_to_labeling(R.pattern))


def corners(R: RibbonDiagram) -> Corners:
    """Classify cells by their neighbors in the plane.

    LU: nothing to the left and nothing above. RL: nothing to the right and
    nothing below. A one-box ribbon is both.
    """
    occupied = R.index
    lu, rl = [], []
    for i, (r, c) in enumerate(R.cells):
        if (r, c - 1) not in occupied and (r + 1, c) not in occupied:
            lu.append(i)
        if (r, c + 1) not in occupied and (r - 1, c) not in occupied:
            rl.append(i)
    return Corners(tuple(lu), tuple(rl))


def find_subribbon(R: RibbonDiagram, beta: Sequence[int], anchor: str = "anywhere") -> list[int]:
    """Start indices of every contiguous run of cells shaped like ``beta``.

    A run is shaped like ``beta`` exactly when the matching slice of the
    ad-pattern equals ``beta``'s own pattern.
    """
    if anchor not in ANCHORS:
        raise ValueError(f"anchor must be one of {ANCHORS}, got {anchor!r}")
    beta = Composition(beta)
    size = beta.size
    if size > R.n:
        return []
    word, sub = R.pattern, composition_to_pattern(beta)
    starts = range(R.n - size + 1)
    if anchor == "begins":
        starts = [0]
    elif anchor == "ends":
        starts = [R.n - size]
    return [p for p in starts if word[p:p + size - 1] == sub]


def regular_subribbons(R: RibbonDiagram) -> list[int]:
    """Start indices of the regular (2,1) sub-ribbons.

    A row of length 2 qualifies when the next row has length >= 2 or is a
    terminal row of length 1; the sub-ribbon is that row plus the first box
    of the next one.
    """
    alpha = R.composition
    slices = R.row_slices()
    hits = []
    for i in range(len(alpha) - 1):
        if alpha[i] != 2:
            continue
        nxt = alpha[i + 1]
        if nxt >= 2 or (nxt == 1 and i + 1 == len(alpha) - 1):
            hits.append(slices[i].start)
    return hits


def is_regular(R: RibbonDiagram) -> tuple[bool, list[int]]:
    hits = regular_subribbons(R)
    return bool(hits), hits


@dataclass(frozen=True)
class RibbonTableau:
    """A ribbon diagram with one color per cell, listed in ribbon order."""

    diagram: RibbonDiagram
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if len(colors) != self.diagram.n:
            raise ValueError(f"need {self.diagram.n} colors, got {len(colors)}")
        if any(c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RibbonTableau":
        """Build from row contents listed bottom to top, left to right."""
        rows = [tuple(r) for r in rows]
        diagram = RibbonDiagram(Composition(len(r) for r in rows))
        return cls(diagram, tuple(c for r in rows for c in r))

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(self.colors[i] for i in sl) for sl in self.diagram.row_slices()]

    def color_at(self, cell: tuple[int, int]) -> int | None:
        i = self.diagram.index.get(cell)
        return None if i is None else self.colors[i]

    def palette(self) -> tuple[int, ...]:
        """Multiplicity of each color 1..max (zeros kept)."""
        top = max(self.colors)
        return tuple(self.colors.count(c) for c in range(1, top + 1))

    def horizontal_pairs(self):
        """``(left, right)`` index pairs of horizontally adjacent cells."""
        idx = self.diagram.index
        return [(i, idx[(r, c + 1)]) for i, (r, c) in enumerate(self.diagram.cells) if (r, c + 1) in idx]

    def vertical_pairs(self):
        """``(top, bottom)`` index pairs of vertically adjacent cells."""
        idx = self.diagram.index
        return [(idx[(r + 1, c)], i) for i, (r, c) in enumerate(self.diagram.cells) if (r + 1, c) in idx]

    def is_proper(self) -> bool:
        pairs = self.horizontal_pairs() + self.vertical_pairs()
        return all(self.colors[a] != self.colors[b] for a, b in pairs)

    def ascents(self) -> int:
        """Horizontal pairs increasing rightward plus vertical pairs increasing downward."""
        c = self.colors
        return sum(1 for a, b in self.horizontal_pairs() + self.vertical_pairs() if c[a] < c[b])

    def replace(self, changes: dict[int, int]) -> "RibbonTableau":
        colors = list(self.colors)
        for i, col in changes.items():
            colors[i] = col
        return RibbonTableau(self.diagram, tuple(colors))

    def __str__(self) -> str:
        return render(self)

    def compact(self) -> str:
        """Rows bottom to top, e.g. ``1,2,5 | 1,6,7``."""
        return " | ".join(",".join(map(str, r)) for r in self.rows())


def tableau_from_coloring(P: LabeledGraph, c) -> RibbonTableau:
    """Place the color of the vertex at path position ``i`` in cell ``i``."""
    if P.order is None:
        raise ValueError("tableau_from_coloring needs a path built with make_path")
    from chromqsym.engine import _as_map

    c = _as_map(c)
    R = RibbonDiagram.from_pattern(_pattern_of(P))
    return RibbonTableau(R, tuple(c[v] for v in P.order))


def _pattern_of(P: LabeledGraph) -> str:
    seq = P.order
    return "".join("a" if x < y else "d" for x, y in zip(seq, seq[1:]))


def coloring_from_tableau(P: LabeledGraph, T: RibbonTableau) -> dict[int, int]:
    if P.order is None or len(P.order) != T.diagram.n:
        raise ValueError("path and tableau sizes differ")
    if _pattern_of(P) != T.diagram.pattern:
        raise ValueError("tableau shape does not match the path's ad-pattern")
    return {v: T.colors[i] for i, v in enumerate(P.order)}


def max_ascent_characterization(T: RibbonTableau) -> bool:
    """Rows strictly increase rightward and columns strictly increase downward."""
    c = T.colors
    return all(c[a] < c[b] for a, b in T.horizontal_pairs()) and all(
        c[a] < c[b] for a, b in T.vertical_pairs()
    )


def render(obj, blank: str = " ") -> str:
    """ASCII picture, top row first. Diagrams show ``#`` per box."""
    if isinstance(obj, RibbonTableau):
        R, labels = obj.diagram, [str(c) for c in obj.colors]
    else:
        R, labels = obj, ["#"] * obj.n
    width = max(len(s) for s in labels)
    ncols = max(c for _, c in R.cells)
    lines = []
    for row in range(len(R.composition), 0, -1):
        cells = []
        for col in range(1, ncols + 1):
            i = R.index.get((row, col))
            cells.append(blank * width if i is None else labels[i].rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
