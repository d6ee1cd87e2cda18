import math

import numpy as np
import pytest

import mevfair as mf


def test_permutation_helpers():
    assert mf.factorial(5) == 120
    assert mf.lehmer_unrank(3, 0) == [1, 2, 3]
    assert mf.lehmer_unrank(3, 5) == [3, 2, 1]
    assert mf.lehmer_rank([2, 1, 3]) == 2
    # (p * q)(i) = p(q(i))
    assert mf.compose([2, 3, 1], [2, 1, 3]) == [3, 2, 1]
    assert sum(mf.dim(s) ** 2 for s in mf.partitions(6)) == 720


def test_irrep_is_orthogonal():
    m = mf.irrep_matrix([3, 2], [2, 4, 1, 5, 3])
    assert m.shape == (5, 5)
    np.testing.assert_allclose(m @ m.T, np.eye(5), atol=1e-12)


def test_transform_round_trip():
    f = mf.random_payoff(5, seed=4)
    blocks = mf.transform(f)
    assert [tuple(s) for s, _ in blocks] == [tuple(p) for p in mf.partitions(5)]
    np.testing.assert_allclose(mf.inverse(5, blocks), f, atol=1e-12)
    energy = sum(mf.dim(list(s)) * np.sum(m**2) for s, m in blocks) / 120
    assert energy == pytest.approx(np.sum(f**2), rel=1e-12)


def test_generators_and_degree():
    liq = mf.liquidation_payoff(2, 1)
    assert liq.shape == (24,)
    assert int(np.count_nonzero(liq)) == 16
    assert mf.degree(mf.junta_payoff([([(1, 2), (2, 1)], 1.0)], 5)) == 2
    assert mf.cfmm_payoff([1, 2, -1, -2]).max() == pytest.approx(1001.7003996, abs=1e-6)


def test_fairness_exact_cases():
    n = 4
    delta = np.zeros(math.factorial(n))
    delta[7] = 1.0
    every = list(range(24))
    assert mf.lambda_plus(delta, every) == pytest.approx(1 - 1 / 24, abs=1e-12)
    report = mf.fairness_report(np.full(24, 3.0), every)
    assert report["lambda_plus"] == 0.0
    assert report["classification"] == "perfectly_fair"
    assert mf.uncertainty_check(delta)["product"] == pytest.approx(24, rel=1e-12)


def test_sequencing_pipeline():
    cycle = mf.valid_orderings(3, [[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert len(cycle["members"]) == 6
    assert cycle["intersection"]["t_max"] == 0
    unanimous = mf.valid_orderings(4, [[2, 1, 4, 3]] * 3)
    assert len(unanimous["members"]) == 1
    assert unanimous["intersection"]["t_max"] == 4
    assert mf.simulate(4, 5, "iid", 9) == mf.simulate(4, 5, "iid", 9)


def test_indicator_degree_and_cayley():
    a = mf.stabilizer_set(5, [(1, 1), (2, 3)])
    assert len(a) == 6
    check = mf.verify_indicator_degree(5, a)
    assert check["claim_holds"]
    report = mf.spectrum_report(4, [0, 1, 2, 6])  # identity plus transpositions
    assert report["violations"] == 0


def test_suites_and_errors():
    passed, report = mf.run_suite("claim2", n=5)
    assert passed
    assert report["report"]["implied_cprime"] == pytest.approx(0.4, rel=1e-9)
    with pytest.raises(mf.CapacityError):
        mf.random_payoff(9, seed=0)
    with pytest.raises(mf.DimensionError):
        mf.degree(np.zeros(7))
    with pytest.raises(ValueError):
        mf.liquidation_payoff(2, 3)
    with pytest.raises(mf.DegenerateError):
        mf.uncertainty_check(np.zeros(6))
