from fractions import Fraction

import numpy as np
import pytest

from pcpforge.utils.errors import InputError, SizeError
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover import generate_planted
from pcpforge.reductions import (
    fourss_rejection, fourss_rejection_terms, rho4_benchmark, export_4ss_instance,
    partition_from_proofs, long_code_proofs, random_proofs, constant_proofs, ones_fraction,
    max_solution_bruteforce, SetSplitInstance, MonteCarloEstimate,
)

EPS = Fraction(1, 4)


@pytest.fixture
def small():
    return generate_planted(2, 2, 2, 2, 2, seed=4)


def test_completeness_and_all_ones(small):
    lc, lab = small
    assert fourss_rejection(lc, long_code_proofs(lc, lab, left=False), EPS) == 0
    assert fourss_rejection(lc, constant_proofs(lc, left=False), EPS) == 1


def test_export_matches_verifier(small):
    lc, _ = small
    inst = export_4ss_instance(lc, EPS)
    assert inst.n_elements == 2 * 4
    for seed in range(4):
        proofs = random_proofs(lc, seed=seed, density=0.7, left=False)
        side = partition_from_proofs(lc, proofs)
        assert inst.inside_weight(side, 1) == fourss_rejection(lc, proofs, EPS)


def test_yes_partition_splits_everything(small):
    lc, lab = small
    inst = export_4ss_instance(lc, EPS)
    assert inst.split_weight(partition_from_proofs(lc, long_code_proofs(lc, lab))) == 1
    assert inst.split_weight(np.ones(inst.n_elements, dtype=np.int64)) == 0
    best, side = max_solution_bruteforce(inst)
    assert best == 1 and inst.split_weight(side) == 1


def test_random_partition_recount(small):
    lc, _ = small
    inst = export_4ss_instance(lc, EPS)
    side = np.where(make_rng(5, "partition").random(inst.n_elements) < 0.5, 1, -1)
    recount = Fraction(0)
    for w, s in inst.sets:
        if len(set(int(side[e - 1]) for e in s)) == 2:
            recount += w
    assert inst.split_weight(side) == recount
    assert recount == 1 - inst.inside_weight(side, 1) - inst.inside_weight(side, -1)


def test_expansion_terms(small):
    lc, _ = small
    proofs = random_proofs(lc, seed=6, density=0.6, left=False)
    terms = fourss_rejection_terms(lc, proofs, EPS)
    assert len(terms) == 16
    assert terms[()] == 1
    mean = 2 * ones_fraction(proofs) - 1
    for q in ("x", "x'", "y", "y'"):
        assert terms[(q,)] == mean
    assert sum(terms.values()) / 16 == fourss_rejection(lc, proofs, EPS)


def test_rho4_benchmark(small):
    lc, _ = small
    proofs = random_proofs(lc, seed=7, density=0.8, left=False)
    report = rho4_benchmark(lc, proofs, EPS)
    assert report["rho"] == ones_fraction(proofs)
    assert report["rho4"] == report["rho"] ** 4
    assert report["gap"] == report["rejection"] - report["rho4"]


def test_sampled_rejection_agrees(small):
    lc, _ = small
    proofs = random_proofs(lc, seed=8, density=0.7, left=False)
    exact = float(fourss_rejection(lc, proofs, EPS))
    est = fourss_rejection(lc, proofs, EPS, mode="sample", samples=200000, seed=3)
    assert isinstance(est, MonteCarloEstimate)
    assert abs(est.value - exact) <= 4 * est.stderr


def test_expected_random_value():
    inst = SetSplitInstance(4, [(Fraction(1, 2), (1, 2, 3, 4)), (Fraction(1, 2), (1, 1, 2, 2))])
    assert inst.expected_random_value() == Fraction(1, 2) * Fraction(7, 8) + Fraction(1, 2) * Fraction(1, 2)
    assert inst.to_text() == "p setsplit 4 2\n1 2 1 2 3 4\n1 2 1 1 2 2\n"
    sides = [np.array([1 - 2 * ((t >> j) & 1) for j in range(4)]) for t in range(16)]
    assert sum(inst.split_weight(s) for s in sides) / 16 == inst.expected_random_value()


def test_caps(small):
    lc, _ = small
    proofs = random_proofs(lc, seed=1, left=False)
    with pytest.raises(SizeError):
        fourss_rejection(lc, proofs, EPS, cap=100)
    with pytest.raises(SizeError):
        export_4ss_instance(lc, EPS, cap=100)


def test_set_weights_are_normalized():
    sets = [(Fraction(3), (1, 2, 3, 4)), (Fraction(1), (1, 1, 2, 2)), (Fraction(5), (2, 3, 3, 4))]
    base = SetSplitInstance(4, sets)
    assert sum(w for w, _ in base.sets) == 1
    assert SetSplitInstance(4, [(Fraction(3), (1, 2, 3, 4))]).sets[0][0] == 1
    scaled = SetSplitInstance(4, [(3 * w, s) for w, s in sets])
    best, side = max_solution_bruteforce(base)
    best3, side3 = max_solution_bruteforce(scaled)
    assert best == best3 == 1
    assert np.array_equal(side, side3)
    with pytest.raises(InputError):
        SetSplitInstance(4, [])
