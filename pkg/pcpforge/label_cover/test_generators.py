from fractions import Fraction

import pytest

from pcpforge.utils.errors import ConfigError, InputError, SizeError
from pcpforge.utils.rng import make_rng
from pcpforge.utils.exp_utils import read_file
from pcpforge.label_cover import (
    LabelCoverInstance, Labeling, value, generate_planted, from_3sat_base_game,
    parallel_repetition, lift_labeling, optimum_bruteforce, expected_random_right_value,
)
from pcpforge.label_cover.generators import parse_cnf

ALL_SIGNS = [(a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1)]


def test_trivial_planted_instance():
    inst, lab = generate_planted(1, 1, 1, 1, 1, seed=0)
    assert inst.edges == ((0, 0),)
    assert inst.projections == ((0,),)
    assert lab == Labeling([0], [0])
    assert value(inst, lab) == 1


def test_planted_is_deterministic_and_perfect():
    inst, lab = generate_planted(4, 4, 2, 3, 6, seed=7)
    again, lab2 = generate_planted(4, 4, 2, 3, 6, seed=7)
    assert inst == again and lab == lab2
    assert value(inst, lab) == 1
    assert inst.n_edges == 8
    other, _ = generate_planted(4, 4, 2, 3, 6, seed=8)
    assert other != inst


def test_planted_random_right_relabel_matches_expectation():
    inst, lab = generate_planted(4, 4, 2, 3, 6, seed=7)
    rng = make_rng(7, "relabel")
    trials = 1000
    total = Fraction(0)
    for _ in range(trials):
        right = [int(l) for l in rng.integers(0, inst.m, size=inst.v_count)]
        total += value(inst, Labeling(lab.left, right))
    mean = float(total / trials)
    assert abs(mean - float(expected_random_right_value(inst, lab))) < 0.05


def test_planted_infeasible_parameters():
    with pytest.raises(ConfigError):
        generate_planted(2, 3, 4, 2, 3, seed=0)     # degree > v_count
    with pytest.raises(ConfigError):
        generate_planted(2, 2, 1, 4, 3, seed=0)     # k > m
    with pytest.raises(ConfigError) as err:
        generate_planted(1, 5, 2, 2, 3, seed=0, bijective=True)
    assert len(err.value.problems) == 2


def test_bijective_projections():
    inst, lab = generate_planted(3, 3, 2, 4, 4, seed=5, bijective=True)
    assert value(inst, lab) == 1
    assert all(sorted(pi) == [0, 1, 2, 3] for pi in inst.projections)


def test_3sat_game_shape():
    inst = from_3sat_base_game([(1, -2, 3)])
    assert (inst.k, inst.m, inst.u_count, inst.v_count) == (2, 7, 3, 1)
    assert optimum_bruteforce(inst)[0] == 1


def test_3sat_game_unsatisfiable():
    inst = from_3sat_base_game(ALL_SIGNS)
    best, lab = optimum_bruteforce(inst)
    # every assignment falsifies one clause, which keeps 2 of its 3 edges
    assert best == Fraction(23, 24)
    assert value(inst, lab) == best


def test_3sat_game_satisfiable_iff_value_one():
    inst = from_3sat_base_game([(1, 2, 3), (-1, -2, 3), (1, -2, -3)])
    assert optimum_bruteforce(inst)[0] == 1


def test_dimacs_lines_are_accepted():
    dimacs = [["c", "three", "clauses"], ["p", "cnf", 3, 3], [1, 2, 3, 0], [-1, -2, 3, 0], [1, -2, -3, 0]]
    inst = from_3sat_base_game(dimacs)
    plain = from_3sat_base_game([(1, 2, 3), (-1, -2, 3), (1, -2, -3)])
    assert inst.digest() == plain.digest()
    assert parse_cnf(dimacs + [["%"], [0], [9, 9, 9]]) == [(1, 2, 3), (-1, -2, 3), (1, -2, -3)]


def test_dimacs_file_read_from_disk(tmp_path):
    path = tmp_path / "tiny.cnf"
    path.write_text("c tiny\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n")
    clauses = parse_cnf(read_file(str(path)))
    assert clauses == [(1, -2, 3), (-1, 2, -3)]
    assert optimum_bruteforce(from_3sat_base_game(clauses))[0] == 1


def test_malformed_cnf():
    with pytest.raises(InputError):
        from_3sat_base_game([])
    with pytest.raises(InputError):
        from_3sat_base_game([(1, 2)])
    with pytest.raises(InputError):
        from_3sat_base_game([(1, -1, 2)])
    with pytest.raises(InputError):
        from_3sat_base_game([(1, 0, 2)])


def test_repetition_identity():
    inst, lab = generate_planted(3, 3, 2, 2, 3, seed=3)
    rep = parallel_repetition(inst, 1)
    assert rep == inst
    assert lift_labeling(lab, inst, 1) == lab


def test_repetition_lifts_perfect_labeling():
    inst, lab = generate_planted(2, 2, 1, 2, 3, seed=4)
    rep = parallel_repetition(inst, 2)
    assert (rep.k, rep.m, rep.u_count, rep.v_count, rep.n_edges) == (4, 9, 4, 4, 4)
    assert value(rep, lift_labeling(lab, inst, 2)) == 1


def test_repetition_never_beats_base_value():
    # two edges forcing conflicting labels on the single u
    base = LabelCoverInstance(1, 2, [(0, 0), (0, 1)], 2, 2, [[0, 0], [1, 1]])
    assert optimum_bruteforce(base)[0] == Fraction(1, 2)
    rep = parallel_repetition(base, 2)
    assert optimum_bruteforce(rep)[0] <= Fraction(1, 2)


def test_repetition_cap():
    inst, _ = generate_planted(2, 2, 1, 2, 3, seed=4)
    with pytest.raises(SizeError):
        parallel_repetition(inst, 3, cap=100)
