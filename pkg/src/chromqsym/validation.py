"""Input validation helpers shared by the library and the estimator layer."""
from __future__ import annotations

from numbers import Integral
from typing import Sequence


def check_labeling(labeling: Sequence[int]) -> tuple[int, ...]:
    """Return ``labeling`` as a tuple, raising unless it is a permutation of 1..n."""
    seq = tuple(labeling)
    if not seq:
        raise ValueError("labeling must be nonempty")
    for v in seq:
        if not isinstance(v, Integral) or isinstance(v, bool):
            raise TypeError(f"labels must be integers, got {v!r}")
    seq = tuple(int(v) for v in seq)
    if sorted(seq) != list(range(1, len(seq) + 1)):
        raise ValueError(f"{seq} is not a permutation of 1..{len(seq)}")
    return seq


def check_parts(parts: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(parts)
    if not seq:
        raise ValueError("a composition needs at least one part")
    for p in seq:
        if not isinstance(p, Integral) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition parts must be positive integers, got {seq}")
    return tuple(int(p) for p in seq)


def check_graph(obj):
    """Coerce ``obj`` to a :class:`~chromqsym.graph.LabeledGraph`.

    Accepts a graph, a permutation (read as a path labeling), or the plain-text
    graph format.
    """
    from chromqsym.graph import LabeledGraph, make_path, parse_graph_text

    if isinstance(obj, LabeledGraph):
        return obj
    if isinstance(obj, str):
        return parse_graph_text(obj)
    try:
        return make_path(obj)
    except TypeError:
        raise TypeError(f"cannot interpret {type(obj).__name__} as a labeled graph") from None


def check_graphs(X) -> list:
    """Validate an iterable of graph-like inputs for the estimator API."""
    if isinstance(X, (str, bytes)):
        raise TypeError("expected a sequence of graphs, got a single string")
    graphs = [check_graph(g) for g in X]
    if not graphs:
        raise ValueError("expected at least one graph")
    return graphs
