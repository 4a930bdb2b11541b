from fractions import Fraction

import pytest

from pcpforge.utils.errors import InputError
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover import LabelCoverInstance, Labeling, value, generate_planted
from pcpforge.label_cover import expected_random_right_value, is_biregular


def naive_value(inst, labeling):
    hits = 0
    for e in range(inst.n_edges):
        u, v = inst.edges[e]
        if inst.projections[e][labeling.right[v]] == labeling.left[u]:
            hits += 1
    return Fraction(hits, inst.n_edges)


def random_labeling(inst, rng):
    return Labeling(rng.integers(0, inst.k, size=inst.u_count),
                    rng.integers(0, inst.m, size=inst.v_count))


def test_single_edge_wrong_left_label_is_zero():
    inst = LabelCoverInstance(1, 1, [(0, 0)], 2, 2, [[0, 0]])
    assert value(inst, Labeling([1], [0])) == 0
    assert value(inst, Labeling([0], [1])) == 1


def test_value_matches_naive_recount():
    inst, _ = generate_planted(5, 4, 2, 3, 5, seed=11)
    rng = make_rng(0, "test-value")
    for _ in range(50):
        lab = random_labeling(inst, rng)
        v = value(inst, lab)
        assert v == naive_value(inst, lab)
        assert 0 <= v <= 1


def test_dimension_mismatch():
    inst, lab = generate_planted(2, 2, 1, 2, 3, seed=1)
    with pytest.raises(InputError):
        value(inst, Labeling(lab.left + (0,), lab.right))
    with pytest.raises(InputError):
        value(inst, Labeling(lab.left, [inst.m] * inst.v_count))


def test_invalid_instances():
    with pytest.raises(InputError):
        LabelCoverInstance(1, 1, [(0, 0)], 1, 2, [[0, 1]])   # value outside [k]
    with pytest.raises(InputError):
        LabelCoverInstance(1, 2, [(0, 0)], 1, 1, [[0]])      # v=1 isolated
    with pytest.raises(InputError):
        LabelCoverInstance(1, 1, [(0, 0)], 3, 2, [[0, 0]])   # k > m
    with pytest.raises(InputError):
        LabelCoverInstance(1, 1, [(0, 0)], 1, 2, [[0]])      # partial map


def test_serialization_is_one_based():
    inst = LabelCoverInstance(1, 1, [(0, 0)], 1, 2, [[0, 0]])
    data = inst.to_dict()
    assert data == {"k": 1, "m": 2, "u_count": 1, "v_count": 1,
                    "edges": [{"u": 1, "v": 1, "pi": [1, 1]}]}
    assert LabelCoverInstance.from_dict(data) == inst
    assert Labeling.from_dict({"left": [1], "right": [2]}) == Labeling([0], [1])


def test_expected_random_right_value_counts_preimages():
    # pi^-1(l_u) has 2 of 3 right labels on the first edge, 1 of 3 on the second
    inst = LabelCoverInstance(1, 2, [(0, 0), (0, 1)], 2, 3, [[0, 0, 1], [0, 1, 1]])
    lab = Labeling([0], [0, 0])
    assert expected_random_right_value(inst, lab) == Fraction(1, 2)


def test_biregular_flag():
    inst = LabelCoverInstance(1, 2, [(0, 0), (0, 1)], 1, 1, [[0], [0]])
    assert is_biregular(inst)
    inst = LabelCoverInstance(2, 2, [(0, 0), (0, 1), (1, 1)], 1, 1, [[0], [0], [0]])
    assert not is_biregular(inst)
