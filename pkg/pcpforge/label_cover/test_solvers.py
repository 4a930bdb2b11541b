from fractions import Fraction

import pytest

from pcpforge.utils.errors import InputError, SizeError
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover import (
    LabelCoverInstance, Labeling, value, generate_planted, optimum_bruteforce,
    projection_expansion_stats,
)


def test_planted_optimum_is_one():
    inst, _ = generate_planted(3, 3, 2, 2, 3, seed=2)
    best, lab = optimum_bruteforce(inst)
    assert best == 1 and value(inst, lab) == 1


def test_conflicting_edges():
    inst = LabelCoverInstance(1, 2, [(0, 0), (0, 1)], 2, 2, [[0, 0], [1, 1]])
    best, lab = optimum_bruteforce(inst)
    assert best == Fraction(1, 2)
    # lexicographically smallest right labeling and smallest tied left label
    assert lab == Labeling([0], [0, 0])


def test_optimum_dominates_random_labelings():
    inst, _ = generate_planted(3, 4, 2, 2, 3, seed=9)
    rng = make_rng(9, "dominates")
    best, _ = optimum_bruteforce(inst)
    for _ in range(100):
        lab = Labeling(rng.integers(0, inst.k, size=inst.u_count),
                       rng.integers(0, inst.m, size=inst.v_count))
        assert best >= value(inst, lab)


def test_workers_do_not_change_result(monkeypatch):
    import pcpforge.label_cover.solvers as solvers
    monkeypatch.setattr(solvers, "BRUTE_CHUNK", 7)
    inst, _ = generate_planted(3, 4, 2, 2, 3, seed=9)
    assert optimum_bruteforce(inst, workers=1) == optimum_bruteforce(inst, workers=2)


def test_bruteforce_cap():
    inst, _ = generate_planted(3, 4, 2, 2, 3, seed=9)
    with pytest.raises(SizeError):
        optimum_bruteforce(inst, cap=3 ** 4 - 1)


def test_expansion_singletons():
    inst, _ = generate_planted(4, 4, 2, 3, 6, seed=7)
    report = projection_expansion_stats(inst, 1, 200, seed=0)
    assert report["mean"] == 1 and report["fitted_c0"] == 0.0


def test_expansion_bijective():
    inst, _ = generate_planted(4, 4, 2, 4, 4, seed=7, bijective=True)
    for size in (2, 3, 4):
        report = projection_expansion_stats(inst, size, 100, seed=size)
        assert report["mean"] == Fraction(1, size)
        assert abs(report["fitted_c0"] - 0.5) < 1e-12


def test_expansion_bounds():
    inst, _ = generate_planted(4, 4, 2, 3, 6, seed=7)
    report = projection_expansion_stats(inst, 3, 300, seed=1)
    assert Fraction(1, 3) <= report["mean"] <= 1
    with pytest.raises(InputError):
        projection_expansion_stats(inst, 7, 10)
