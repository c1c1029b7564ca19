import pytest

from chromqsym.engine import cqf
from chromqsym.graph import LabeledGraph, make_path, make_star
from chromqsym.lab import (
    CaseLabel,
    HypothesisError,
    IncompleteCaseAnalysis,
    VerificationError,
    admissible_pairs,
    b_interval,
    bprime_minus_b_witness,
    check_corner_proposition,
    classify_paths,
    confirm_case,
    in_stacked_B,
    in_stacked_Bprime,
    main_theorem_case_analysis,
    psi,
    psi_nonsurjectivity_witness,
    random_trees_unequal_bipartition,
    regular_sets,
    stacked_rows_report,
    stacked_sets,
    two_next_to_ones,
    verify_bipartite,
    verify_star,
    zeta,
    zeta_inverse,
)
from chromqsym.qsym import QPolynomial, compositions_of, is_palindromic
from chromqsym.ribbon import RibbonDiagram, RibbonTableau

rows = RibbonTableau.from_rows
R334 = RibbonDiagram((3, 3, 4))
C1 = rows([(1, 2, 5), (1, 6, 7), (1, 3, 4, 8)])
C2 = rows([(1, 2, 4), (1, 5, 6), (1, 3, 7, 8)])
PSI_T = rows([(6,), (2, 4), (2, 5), (2,), (1, 3), (2,)])
PSI_IMAGE = rows([(6,), (1, 4), (1, 5), (2,), (1, 3), (1,)])
T_PRIME = rows([(6,), (1, 4), (1, 5), (3,), (1, 2), (1,)])


class TestZeta:
    def test_interval(self):
        assert list(b_interval(R334, 1)) == [3, 4, 5, 6]
        assert (1, 4) in admissible_pairs(R334)

    def test_c1_lands_in_B(self):
        out = zeta(C1, 4)
        assert out.rows() == [(2, 4, 5), (4, 6, 7), (1, 3, 4, 8)]
        assert in_stacked_B(out, 4)
        assert zeta_inverse(out, 4) == C1

    def test_c2_lands_outside_B(self):
        out = zeta(C2, 4)
        assert out.rows() == [(1, 2, 4), (4, 5, 6), (3, 4, 7, 8)]
        assert in_stacked_Bprime(out, 4) and not in_stacked_B(out, 4)
        assert zeta_inverse(out, 4) == C2

    def test_rejects_outside_A(self):
        with pytest.raises(HypothesisError):
            zeta(rows([(1, 2, 5), (1, 6, 7), (2, 3, 4, 8)]), 4)

    def test_rejects_bad_b(self):
        with pytest.raises(HypothesisError):
            zeta(C1, 9)

    def test_rejects_unstacked_ribbon(self):
        with pytest.raises(HypothesisError):
            zeta(rows([(1,), (2, 3)]), 2)

    def test_inverse_identity_on_22(self):
        sets = stacked_sets(RibbonDiagram((2, 2)), 1, 2)
        assert sets["Bprime"].members
        for U in sets["Bprime"].members:
            assert zeta(zeta_inverse(U, 2), 2) == U

    @pytest.mark.parametrize("alpha", [(2, 2), (2, 3), (3, 3, 4)])
    def test_report(self, alpha):
        for row in stacked_rows_report(RibbonDiagram(alpha)):
            assert row["bijective"] and row["B_subset"] and row["witness_outside_B"]
            assert row["A"] == row["Bprime"] > row["B"]


class TestBprimeWitness:
    def test_334_example(self):
        W = bprime_minus_b_witness(R334, 1, 4)
        assert W.compact() == "1,2,4 | 4,7,8 | 3,4,5,6"

    def test_small(self):
        W = bprime_minus_b_witness(RibbonDiagram((2, 2)), 1, 2)
        assert W.rows() == [(1, 2), (2, 3)]
        assert not W.is_proper()

    @pytest.mark.parametrize("alpha", [(2, 2), (2, 3), (3, 3, 4), (2, 2, 2)])
    def test_fails_only_at_joining_column(self, alpha):
        R = RibbonDiagram(alpha)
        for i, b in admissible_pairs(R):
            W = bprime_minus_b_witness(R, i, b)
            bad = [(t, u) for t, u in W.vertical_pairs() if W.colors[t] == W.colors[u]]
            joint = R.row_slices()[i - 1][-1]
            assert bad == [(joint + 1, joint)]


class TestPsi:
    def test_displayed_T(self):
        assert psi(PSI_T) == PSI_IMAGE
        assert two_next_to_ones(PSI_IMAGE) == [1]

    def test_displayed_T_prime(self):
        R = PSI_T.diagram
        W = psi_nonsurjectivity_witness(R, site=6, base=PSI_IMAGE)
        assert W == T_PRIME
        assert 2 in two_next_to_ones(W)

    def test_default_witness_is_valid(self):
        R = PSI_T.diagram
        sets = regular_sets(R)
        W = psi_nonsurjectivity_witness(R)
        assert W in sets["A"]
        assert W not in {psi(T) for T in sets["B"].members}

    @pytest.mark.parametrize("alpha", [(2, 1), (1, 2, 2, 1, 2, 1), (2, 2, 1), (1, 2, 2)])
    def test_injective_not_surjective(self, alpha):
        R = RibbonDiagram(alpha)
        sets = regular_sets(R)
        A, B = sets["A"].members, sets["B"].members
        images = [psi(T) for T in B]
        assert len(set(images)) == len(B)
        assert set(images) < set(A)
        assert all(two_next_to_ones(U) == [1] for U in images)
        assert psi_nonsurjectivity_witness(R) not in set(images)

    def test_21_witness(self):
        W = psi_nonsurjectivity_witness(RibbonDiagram((2, 1)))
        assert W.rows() == [(1, 2), (1,)]

    def test_rejects_hypothesis_failure(self):
        with pytest.raises(HypothesisError):
            regular_sets(RibbonDiagram((1, 4)))
        with pytest.raises(HypothesisError):
            psi_nonsurjectivity_witness(RibbonDiagram((2, 1)), site=1)


class TestCorners:
    @pytest.mark.parametrize("alpha, lu, rl", [((2, 1, 2, 1), 3, 2), ((1, 4), 1, 2), ((2, 2, 1), 3, 2)])
    def test_confirmed(self, alpha, lu, rl):
        v = check_corner_proposition(RibbonDiagram(alpha))
        assert (v.lu, v.rl) == (lu, rl)
        assert v.nonpalindromic

    def test_rejects_equal_counts(self):
        with pytest.raises(HypothesisError):
            check_corner_proposition(RibbonDiagram((2, 2)))


class TestCaseAnalysis:
    def test_labels(self):
        assert CaseLabel("corner-mismatch", "direct") in main_theorem_case_analysis(RibbonDiagram((1, 4)))
        assert CaseLabel("stacked-rows", "direct") in main_theorem_case_analysis(RibbonDiagram((2, 3)))
        assert CaseLabel("stacked-rows", "reflected") in main_theorem_case_analysis(RibbonDiagram((1, 2, 1, 1)))

    def test_rejects_natural(self):
        with pytest.raises(HypothesisError):
            main_theorem_case_analysis(RibbonDiagram((4,)))

    def test_incomplete_is_a_verification_error(self):
        assert issubclass(IncompleteCaseAnalysis, VerificationError)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_total_and_confirmed(self, n):
        for alpha in compositions_of(n):
            if len(alpha) in (1, n):
                continue
            R = RibbonDiagram(alpha)
            labels = main_theorem_case_analysis(R)
            assert labels
            for label in labels:
                confirm_case(R, label)


class TestClassification:
    def test_n2(self):
        report = classify_paths(2)
        assert report.symmetric_patterns == ["a", "d"]
        assert report.rows[0].isomorphic_to == "d"

    @pytest.mark.parametrize("n, symmetric", [(4, 2), (6, 2)])
    def test_counts(self, n, symmetric):
        report = classify_paths(n)
        assert len(report.rows) == 2 ** (n - 1)
        assert len(report.symmetric_patterns) == symmetric
        assert report.theorem_holds

    def test_witnesses_are_genuine(self):
        for r in classify_paths(5).rows:
            if r.symmetric:
                continue
            Q = cqf(make_path(RibbonDiagram(r.composition) and _labeling(r.pattern)))
            a, b = r.symmetry_witness
            assert Q[a] != Q[b]

    def test_json_and_text(self):
        report = classify_paths(3)
        d = report.to_dict()
        assert d["pattern_count"] == 4 and d["symmetric_count"] == 2
        assert "2 of 4 patterns symmetric" in report.to_text()

    def test_bounds(self):
        with pytest.raises(ValueError):
            classify_paths(11)


def _labeling(word):
    from chromqsym.graph import pattern_to_labeling

    return pattern_to_labeling(word)


class TestStars:
    def test_n5(self):
        table = verify_star(5)
        assert all(r.ok for r in table)
        assert [r.center for r in table if r.palindromic] == [3]
        assert not any(r.symmetric for r in table)

    def test_n4_never_palindromic(self):
        assert not any(r.palindromic for r in verify_star(4))

    def test_n7_center(self):
        row = verify_star(7)[3]
        assert row.c_1_rest == row.c_rest_1 == QPolynomial.monomial(3)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            verify_star(2)


class TestBipartite:
    def test_examples(self):
        skipped, checked = verify_bipartite([make_path((1, 2, 3, 4)), make_star(4, 1)])
        assert skipped.status == "skipped" and skipped.note == "equal bipartition"
        assert checked.status == "checked" and checked.ok and not checked.palindromic
        assert checked.r + checked.s == 3

    def test_skips_non_bipartite_and_disconnected(self):
        tri = LabeledGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
        two = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])
        assert [r.note for r in verify_bipartite([tri, two])] == ["not bipartite", "disconnected"]

    def test_random_trees(self):
        trees = random_trees_unequal_bipartition(20, sizes=(4, 6, 8), seed=4)
        for row in verify_bipartite(trees):
            assert row.status == "checked" and row.ok
            assert not is_palindromic(cqf(row.graph), row.graph.m)[0]
