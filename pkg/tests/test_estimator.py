import numpy as np
import pytest
from sklearn.base import clone

from chromqsym.estimator import CQFTransformer, SymmetryClassifier
from chromqsym.graph import make_path, make_star
from chromqsym.validation import check_graph, check_graphs, check_labeling


def test_transformer_columns():
    X = [(3, 4, 1, 2), (2, 4, 3, 1), make_star(4, 2)]
    tr = CQFTransformer().fit(X)
    assert tr.n_vertices_ == 4 and tr.max_edges_ == 3
    table = tr.transform(X)
    assert table.shape == (3, 8 * 4)
    names = list(tr.get_feature_names_out())
    row = dict(zip(names, table[0]))
    assert [row[f"M(1,1,1,1)q^{i}"] for i in range(4)] == [5, 7, 7, 5]
    assert row["M(2,2)q^1"] == 0


def test_fit_transform_and_params():
    tr = CQFTransformer(method="oracle", n_jobs=1)
    assert tr.get_params() == {"method": "oracle", "n_jobs": 1}
    assert clone(tr).get_params() == tr.get_params()
    a = tr.fit_transform(["path: 1 3 2"])
    b = CQFTransformer().fit_transform([(1, 3, 2)])
    assert (a == b).all()


def test_transformer_errors():
    with pytest.raises(ValueError):
        CQFTransformer().fit([(1, 2), (1, 2, 3)])
    with pytest.raises(ValueError):
        CQFTransformer(method="bogus").fit([(1, 2)])
    tr = CQFTransformer().fit([(1, 2, 3)])
    with pytest.raises(ValueError):
        tr.transform([(1, 2)])
    with pytest.raises(ValueError):
        tr.transform(["n=3\n1 2\n2 3\n1 3"])


def test_unfitted():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        CQFTransformer().transform([(1, 2)])
    with pytest.raises(NotFittedError):
        SymmetryClassifier().predict([(1, 2)])


def test_classifier():
    X = [(1, 2, 3, 4), (3, 4, 1, 2), make_star(5, 3), make_star(5, 2)]
    sym = SymmetryClassifier().fit(X).predict(X)
    pal = SymmetryClassifier(target="palindromic").fit(X).predict(X)
    assert sym.dtype == bool
    assert sym.tolist() == [True, False, False, False]
    assert pal.tolist() == [True, True, True, False]
    y = np.array([True, False, False, False])
    assert SymmetryClassifier().fit(X).score(X, y) == 1.0
    with pytest.raises(ValueError):
        SymmetryClassifier(target="other").fit(X)


class TestValidation:
    def test_labeling(self):
        assert check_labeling([2, 1]) == (2, 1)
        with pytest.raises(ValueError):
            check_labeling([1, 3])
        with pytest.raises(TypeError):
            check_labeling([1, "2"])

    def test_graph(self):
        assert check_graph((1, 2, 3)) == make_path((1, 2, 3))
        assert check_graph("star: n=4 center=1") == make_star(4, 1)
        with pytest.raises(TypeError):
            check_graph(3.5)

    def test_graphs(self):
        with pytest.raises(TypeError):
            check_graphs("path: 1 2")
        with pytest.raises(ValueError):
            check_graphs([])
