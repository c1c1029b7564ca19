import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromqsym.engine import cqf
from chromqsym.graph import make_path, make_star
from chromqsym.qsym import (
    Composition,
    QPolynomial,
    QSymExpansion,
    chromatic_from_expansion,
    compositions_of,
    is_palindromic,
    is_symmetric,
    q_reversal,
    reverse,
    rho,
    specialize_q,
)

from conftest import brute_force_colorings

P = QPolynomial
comps = st.lists(st.integers(1, 4), min_size=1, max_size=6).map(Composition)
polys = st.lists(st.integers(0, 20), max_size=5).map(QPolynomial)


@st.composite
def expansions(draw):
    n = draw(st.integers(1, 5))
    keys = draw(st.lists(st.sampled_from(compositions_of(n)), unique=True))
    return QSymExpansion(n, {k: draw(polys) for k in keys})


class TestCompositions:
    def test_small(self):
        assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        assert compositions_of(1) == [(1,)]

    @pytest.mark.parametrize("n", range(1, 11))
    def test_count_and_order(self, n):
        cs = compositions_of(n)
        assert len(cs) == len(set(cs)) == 2 ** (n - 1)
        assert cs == sorted(cs)
        assert all(c.size == n for c in cs)

    @pytest.mark.parametrize("n", [0, -2])
    def test_rejects_nonpositive(self, n):
        with pytest.raises(ValueError):
            compositions_of(n)

    @pytest.mark.parametrize("bad", [(), (0, 2), (1, -1), (1.5,)])
    def test_rejects_bad_parts(self, bad):
        with pytest.raises((ValueError, TypeError)):
            Composition(bad)

    def test_order_matters(self):
        assert Composition((1, 2)) != Composition((2, 1))

    @pytest.mark.parametrize(
        "alpha, expected", [((1, 1, 2), (2, 1, 1)), ((1, 2, 1), (1, 2, 1)), ((2, 2, 1), (1, 2, 2))]
    )
    def test_reverse(self, alpha, expected):
        assert reverse(Composition(alpha)) == expected

    @given(comps)
    def test_reverse_involution(self, alpha):
        assert reverse(reverse(alpha)) == alpha

    @pytest.mark.parametrize("n", range(1, 9))
    def test_rearrangement_classes(self, n):
        classes: dict = {}
        for a in compositions_of(n):
            classes.setdefault(a.partition_key(), []).append(a)
        assert sum(len(v) for v in classes.values()) == 2 ** (n - 1)
        assert len(classes[(1,) * n]) == 1 and len(classes[(n,)]) == 1


class TestQPolynomial:
    def test_trimmed(self):
        assert P([1, 2, 0, 0]).coeffs == (1, 2)
        assert P([0, 0]).degree == float("-inf")

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            P([1, -1])

    def test_str(self):
        assert str(P([5, 7, 7, 5])) == "5q^3+7q^2+7q+5"
        assert str(P([0, 1])) == "q"
        assert str(P()) == "0"

    @given(polys, polys, st.integers(-3, 3))
    def test_addition_evaluates_pointwise(self, a, b, x):
        assert (a + b)(x) == a(x) + b(x)

    @given(polys)
    def test_reversal_involution(self, p):
        m = max(p.degree, 0) + 2
        assert p.reversal(m).reversal(m) == p

    def test_reversal_bounds(self):
        with pytest.raises(ValueError):
            P([1, 1, 1]).reversal(1)

    def test_exact_big_integers(self):
        big = 10**40
        assert (P([big]) + P([big]))[0] == 2 * big


class TestExpansion:
    def test_drops_zero_and_checks_keys(self):
        Q = QSymExpansion(3, {(1, 2): [0], (2, 1): [1]})
        assert Q.support() == [(2, 1)]
        with pytest.raises(ValueError):
            QSymExpansion(3, {(1, 1): [1]})

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            QSymExpansion(2, {(1, 1): [0, 0, 1]}, m=1)

    def test_absent_is_zero(self):
        assert QSymExpansion(2, {})[(1, 1)] == P()


class TestRho:
    def test_swap(self):
        p, r = P([1, 2]), P([3])
        out = rho(QSymExpansion(4, {(1, 1, 2): p, (2, 1, 1): r}))
        assert out[(1, 1, 2)] == r and out[(2, 1, 1)] == p

    @given(expansions())
    def test_involution(self, Q):
        assert rho(rho(Q)) == Q

    def test_path_2431_is_q_reversal(self):
        G = make_path((2, 4, 3, 1))
        Q = cqf(G)
        assert Q[(1, 1, 2)] == P([1, 3, 2])
        assert rho(Q)[(1, 1, 2)] == P([0, 2, 3, 1]) == Q[(2, 1, 1)]
        assert rho(Q) == q_reversal(Q, G.m)


class TestPredicates:
    def test_path_3412(self):
        Q = cqf(make_path((3, 4, 1, 2)))
        assert is_palindromic(Q, 3) == (True, None)
        assert is_symmetric(Q) == (False, ((1, 1, 2), (1, 2, 1)))

    def test_star_center_2(self):
        Q = cqf(make_star(4, 2))
        ok, (alpha, i) = is_palindromic(Q, 3)
        assert not ok
        assert Q[alpha][i] != Q[alpha][3 - i]
        # the star's single-term coefficient c_(1,3) = q^2 is not palindromic
        assert Q[(1, 3)] == P.monomial(2)
        assert not Q[(1, 3)].is_palindromic(3)

    def test_zero_and_singleton_class(self):
        assert is_palindromic(QSymExpansion(3, {}), 2) == (True, None)
        assert is_symmetric(QSymExpansion(3, {(3,): [1, 1]})) == (True, None)

    def test_needs_m(self):
        with pytest.raises(ValueError):
            is_palindromic(QSymExpansion(2, {(1, 1): [1]}))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_natural_paths_symmetric(self, n):
        assert is_symmetric(cqf(make_path(range(1, n + 1))))[0]


class TestSpecialization:
    def test_examples(self):
        assert specialize_q(cqf(make_path((2, 4, 3, 1))), 1)[(1, 1, 2)] == 6
        assert specialize_q(cqf(make_path((3, 4, 1, 2))), 1)[(2, 2)] == 2

    @given(expansions())
    def test_q_zero_gives_constants(self, Q):
        assert specialize_q(Q, 0) == {a: p[0] for a, p in Q.items()}

    @pytest.mark.parametrize("labeling", [(1, 2, 3, 4), (2, 4, 1, 3), (4, 1, 3, 2)])
    @pytest.mark.parametrize("k", range(0, 5))
    def test_chromatic_on_p4(self, labeling, k):
        G = make_path(labeling)
        assert chromatic_from_expansion(cqf(G), k) == brute_force_colorings(G, k)


class TestJSON:
    def test_contract_shape(self):
        data = json.loads(cqf(make_path((2, 4, 3, 1))).to_json())
        assert data["n"] == 4 and data["m"] == 3
        assert {"alpha": [1, 1, 2], "poly": [1, 3, 2]} in data["coeffs"]
        alphas = [tuple(t["alpha"]) for t in data["coeffs"]]
        assert alphas == sorted(alphas)

    @given(expansions())
    def test_round_trip_bytes(self, Q):
        text = Q.to_json()
        assert QSymExpansion.from_json(text) == Q
        assert QSymExpansion.from_json(text).to_json() == text

    def test_malformed(self):
        with pytest.raises(ValueError):
            QSymExpansion.from_json('{"n": 2}')
