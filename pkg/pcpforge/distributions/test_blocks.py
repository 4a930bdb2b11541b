import itertools
from fractions import Fraction

import pytest

from pcpforge.utils.errors import InputError, SizeError
from pcpforge.utils.misc import popcount
from pcpforge.utils.rng import make_rng
from pcpforge.distributions import (
    hypergraph_joint, e3sat_joint, fourss_joint, pair_rule_marginal, FLIP, INDEPENDENT, COPY,
    char_expectation_hypergraph, char_expectation_e3sat, char_expectation_4ss,
    full_support, support_character_table, coordinate_marginals, equal_pattern_probability,
    block_outcomes,
)

EPS = [Fraction(1, 4), Fraction(1, 16)]
BIG = 1 << 16


def _image(mask, pi):
    return {pi[j] for j in range(len(pi)) if (mask >> j) & 1}


def _all_quads(dist):
    m, n = dist.x_dim, dist.y_dim
    return itertools.product(range(1 << m), range(1 << m), range(1 << n), range(1 << n))


def _lookup(dist, table, masks):
    nums, den = table
    if dist.kind == "e3sat":
        a, b, b2 = masks
        idx = a | (b << dist.x_dim) | (b2 << (dist.x_dim + dist.y_dim))
    else:
        a, a2, b, b2 = masks
        m = dist.x_dim
        idx = a | (a2 << m) | (b << 2 * m) | (b2 << (2 * m + dist.y_dim))
    return Fraction(int(nums[idx]), den)


#####################################################################################
### exactness against full enumeration
#####################################################################################

@pytest.mark.parametrize("pi_vu,pi_wu", [
    ([0], [0]),
    ([0, 1], [1, 0]),
    ([0, 0, 1], [1, 0, 0]),
    ([0, 1, 2], [0, 0, 0]),
])
def test_hypergraph_matches_enumeration(pi_vu, pi_wu):
    dist = hypergraph_joint(pi_vu, pi_wu)
    table = support_character_table(dist, cap=BIG)
    for masks in _all_quads(dist):
        assert char_expectation_hypergraph(dist, *masks) == _lookup(dist, table, masks)


@pytest.mark.parametrize("eps", EPS)
@pytest.mark.parametrize("pi_vu,pi_wu", [([0, 1], [1, 0]), ([0, 0, 1], [1, 1, 0])])
def test_fourss_matches_enumeration(pi_vu, pi_wu, eps):
    dist = fourss_joint(pi_vu, pi_wu, eps)
    table = support_character_table(dist, cap=BIG)
    for masks in _all_quads(dist):
        assert char_expectation_4ss(dist, *masks) == _lookup(dist, table, masks)


@pytest.mark.parametrize("eps", EPS)
@pytest.mark.parametrize("pi_vu,k", [([0], 1), ([0, 1, 1], 2), ([0, 0, 1], 3), ([2, 1, 0], 3)])
def test_e3sat_matches_enumeration(pi_vu, k, eps):
    dist = e3sat_joint(pi_vu, eps, k=k)
    table = support_character_table(dist, cap=BIG)
    m = len(pi_vu)
    for a, b, b2 in itertools.product(range(1 << k), range(1 << m), range(1 << m)):
        assert char_expectation_e3sat(dist, a, b, b2) == _lookup(dist, table, (a, b, b2))


def test_weights_sum_to_one():
    for dist in (hypergraph_joint([0, 1], [1, 0]), fourss_joint([0, 0], [0, 1], Fraction(1, 4)),
                 e3sat_joint([0, 1, 1], Fraction(1, 4))):
        assert sum(full_support(dist, cap=BIG).values()) == 1
        assert sum(c.weight for c in dist.configurations()) == 1
        assert dist.n_configurations() == len(list(dist.configurations()))


#####################################################################################
### vanishing and block values
#####################################################################################

def test_hypergraph_vanishes_off_diagonal():
    dist = hypergraph_joint([0, 1, 1], [1, 0, 1])
    rng = make_rng(3, "offdiag")
    for _ in range(200):
        a, a2, b, b2 = [int(v) for v in rng.integers(0, 8, size=4)]
        val = char_expectation_hypergraph(dist, a, a2, b, b2)
        if a != a2 or b != b2 or _image(a, [0, 1, 1]) & _image(b, [1, 0, 1]):
            assert val == 0


def test_single_odd_block_gamma():
    dist = hypergraph_joint([1, 0, 0], [0, 1, 1], k=2)
    assert char_expectation_hypergraph(dist, {1}, {1}, set(), set()) == Fraction(-1, 2)
    assert char_expectation_hypergraph(dist, {2, 3}, {2, 3}, set(), set()) == Fraction(1, 2)


def test_single_quad_probability():
    dist = hypergraph_joint([0], [0])
    joint = full_support(dist)
    assert joint[(0, 1, 0, 0)] == Fraction(1, 16)
    assert joint.get((0, 0, 0, 0), 0) == 0
    assert joint.get((1, 1, 1, 1), 0) == 0


@pytest.mark.parametrize("eps", EPS)
def test_e3sat_block_values(eps):
    dist = e3sat_joint([0, 0, 0], eps)
    for J in ({1}, {1, 2, 3}):
        assert char_expectation_e3sat(dist, set(), J, J) == -eps / 2
        assert char_expectation_e3sat(dist, {1}, J, J) == -(1 - eps / 2)
    for J in ({1, 2}, {2, 3}):
        assert char_expectation_e3sat(dist, set(), J, J) == 1 - eps / 2
        assert char_expectation_e3sat(dist, {1}, J, J) == eps / 2
    assert char_expectation_e3sat(dist, set(), {1}, {2}) == 0
    assert char_expectation_e3sat(dist, {1}, set(), set()) == 0


@pytest.mark.parametrize("eps", EPS)
def test_e3sat_odd_masks_are_small(eps):
    pi = [0, 1, 1, 2]
    dist = e3sat_joint(pi, eps)
    for beta in range(1 << len(pi)):
        odd = any(popcount(beta & block.y_mask) % 2 for block in dist.blocks)
        if odd:
            assert abs(char_expectation_e3sat(dist, 0, beta, beta)) <= eps / 2


@pytest.mark.parametrize("eps", EPS)
def test_fourss_block_values(eps):
    dist = fourss_joint([0, 0, 0], [0, 0, 0], eps)
    assert char_expectation_4ss(dist, {1, 2}, {1, 2}, set(), set()) == 1 - eps / 2
    assert char_expectation_4ss(dist, {1}, {1}, set(), set()) == -eps / 2
    assert char_expectation_4ss(dist, {1}, {1}, {3}, {3}) == -(1 - eps)
    assert char_expectation_4ss(dist, {1, 2}, {1, 2}, {1, 3}, {1, 3}) == 1 - eps
    assert char_expectation_4ss(dist, {1, 2}, {1, 2}, {3}, {3}) == 0


def test_fourss_odd_even_product():
    eps = Fraction(1, 4)
    dist = fourss_joint([0, 0, 1, 2], [0, 1, 2, 2], eps, k=3)
    # alpha = {1,2,3}: block 0 even (2 coords), block 1 odd (1 coord)
    assert char_expectation_4ss(dist, {1, 2, 3}, {1, 2, 3}, set(), set()) == (1 - eps / 2) * (-eps / 2)


@pytest.mark.parametrize("eps", EPS)
def test_fourss_spectral_bound(eps):
    pi_vu, pi_wu = [0, 1, 2, 2, 3], [3, 3, 1, 0, 2]
    dist = fourss_joint(pi_vu, pi_wu, eps)
    rng = make_rng(11, "albeta")
    for _ in range(1000):
        a, b = [int(v) for v in rng.integers(0, 1 << 5, size=2)]
        bound = (1 - eps / 2) ** max(len(_image(a, pi_vu)), len(_image(b, pi_wu)))
        assert abs(char_expectation_4ss(dist, a, a, b, b)) <= bound


#####################################################################################
### structural facts
#####################################################################################

@pytest.mark.parametrize("make", [
    lambda: hypergraph_joint([0, 1, 0], [1, 1, 0]),
    lambda: fourss_joint([0, 1, 0], [1, 1, 0], Fraction(1, 4)),
    lambda: e3sat_joint([0, 1, 0], Fraction(1, 16)),
])
def test_marginals_are_uniform(make):
    dist = make()
    for comp, probs in coordinate_marginals(dist).items():
        assert all(p == Fraction(1, 2) for p in probs), comp


def test_no_monochromatic_pattern():
    for dist in (hypergraph_joint([0, 1, 0], [1, 1, 0]), fourss_joint([0, 1, 0], [1, 1, 0], Fraction(1, 4))):
        for j in range(3):
            for j2 in range(3):
                i = [0, 1, 0][j]
                if [1, 1, 0][j2] == i:
                    assert equal_pattern_probability(dist, j, j2) == 0
                else:
                    with pytest.raises(InputError):
                        equal_pattern_probability(dist, j, j2)


def test_block_outcomes_sum_to_one():
    dist = fourss_joint([0, 0], [0, 0], Fraction(1, 4))
    assert sum(block_outcomes(dist.blocks[0]).values()) == 1


def test_pair_rule_marginal():
    assert pair_rule_marginal("hypergraph") == ((Fraction(1, 2), FLIP), (Fraction(1, 2), INDEPENDENT))
    law = pair_rule_marginal("e3sat", Fraction(1, 4))
    assert law[1] == (Fraction(3, 8), COPY)
    assert sum(w for w, _ in law) == 1
    with pytest.raises(InputError):
        pair_rule_marginal("nope")


def test_validation():
    with pytest.raises(InputError):
        hypergraph_joint([0, 2], [0, 1], k=2)
    with pytest.raises(InputError):
        e3sat_joint([0], Fraction(0))
    with pytest.raises(InputError):
        fourss_joint([0], [0], Fraction(1))
    dist = hypergraph_joint([0], [0])
    with pytest.raises(InputError):
        char_expectation_hypergraph(dist, 2, 2, 0, 0)
    with pytest.raises(InputError):
        char_expectation_e3sat(dist, 0, 0, 0)


def test_oracle_cap():
    dist = hypergraph_joint([0, 0, 0, 0], [0, 0, 0, 0])
    with pytest.raises(SizeError):
        full_support(dist, cap=100)


def test_equal_pattern_rejects_coordinate_outside_blocks():
    dist = hypergraph_joint([0, 1, 0], [1, 1, 0])
    for j in (3, 7, -1):
        with pytest.raises(InputError) as e:
            equal_pattern_probability(dist, j, 0)
        assert "no block" in str(e.value)
