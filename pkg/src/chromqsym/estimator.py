"""scikit-learn compatible wrappers.

``CQFTransformer`` turns a batch of labeled graphs on the same vertex count
into a coefficient table with one column per ``(composition, q-power)``;
``SymmetryClassifier`` predicts whether each graph's CQF is symmetric (or,
with ``target="palindromic"``, palindromic). Both accept anything
:func:`~chromqsym.validation.check_graph` understands.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from chromqsym.engine import cqf
from chromqsym.qsym import compositions_of, is_palindromic, is_symmetric
from chromqsym.validation import check_graphs


class CQFTransformer(TransformerMixin, BaseEstimator):
    """Tabulate CQF coefficients.

    Parameters
    ----------
    method : {"fast", "oracle"}
        Engine route.
    n_jobs : int or None
        Worker processes per graph; ``None`` reads ``CHROMQSYM_WORKERS``.

    Attributes
    ----------
    n_vertices_ : int
    max_edges_ : int
    columns_ : list of (Composition, int)

    Notes
    -----
    Output has ``dtype=object`` so coefficients stay exact Python integers.
    """

    def __init__(self, method="fast", n_jobs=None):
        self.method = method
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        graphs = check_graphs(X)
        sizes = {G.n for G in graphs}
        if len(sizes) != 1:
            raise ValueError(f"all graphs must share a vertex count, got {sorted(sizes)}")
        if self.method not in ("fast", "oracle"):
            raise ValueError(f"method must be 'fast' or 'oracle', got {self.method!r}")
        self.n_vertices_ = sizes.pop()
        self.max_edges_ = max(G.m for G in graphs)
        self.columns_ = [(a, i) for a in compositions_of(self.n_vertices_) for i in range(self.max_edges_ + 1)]
        return self

    def transform(self, X):
        check_is_fitted(self, "columns_")
        graphs = check_graphs(X)
        out = np.zeros((len(graphs), len(self.columns_)), dtype=object)
        for row, G in enumerate(graphs):
            if G.n != self.n_vertices_:
                raise ValueError(f"graph has {G.n} vertices, fitted on {self.n_vertices_}")
            if G.m > self.max_edges_:
                raise ValueError(f"graph has {G.m} edges, fitted for at most {self.max_edges_}")
            Q = cqf(G, method=self.method, n_jobs=self.n_jobs)
            for col, (alpha, i) in enumerate(self.columns_):
                out[row, col] = Q[alpha][i]
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "columns_")
        return np.array([f"M{a}q^{i}" for a, i in self.columns_], dtype=object)


class SymmetryClassifier(ClassifierMixin, BaseEstimator):
    """Exact rule, no learning: ``fit`` only records the classes."""

    def __init__(self, target="symmetric", n_jobs=None):
        self.target = target
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        check_graphs(X)
        if self.target not in ("symmetric", "palindromic"):
            raise ValueError(f"target must be 'symmetric' or 'palindromic', got {self.target!r}")
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        out = []
        for G in check_graphs(X):
            Q = cqf(G, n_jobs=self.n_jobs)
            verdict = is_symmetric(Q) if self.target == "symmetric" else is_palindromic(Q, G.m)
            out.append(verdict[0])
        return np.array(out, dtype=bool)
