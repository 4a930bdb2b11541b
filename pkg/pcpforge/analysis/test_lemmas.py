from fractions import Fraction

import pytest

from pcpforge.utils.errors import PreconditionError, InputError
from pcpforge.utils.misc import submasks
from pcpforge.utils.rng import make_rng
from pcpforge.boolean_fourier import long_code, character_table, constant_table, random_table
from pcpforge.label_cover import generate_planted
from pcpforge.reductions import random_proofs, long_code_proofs
from pcpforge.analysis import (
    pi_image, pi_odd, p_measure, p_measure_blockwise, p_measure_total,
    lemma_bb1_check, lemma_rt_bound, lemma_lowerbd_check, lemma_4ss_xx_check, lemma_4ss_xx_neighborhood,
    fourss_table_check, fourss_spectral_bound_check,
)

EPS = Fraction(1, 4)


def _random_projection(rng, k, m):
    return [int(p) for p in rng.integers(0, k, size=m)]


#####################################################################################
### p_beta(alpha)
#####################################################################################

def test_p_measure_examples():
    pi = (0, 0, 1)
    beta = 0b101
    assert p_measure(pi, beta, pi_odd(pi, beta), EPS) == (1 - EPS / 2) ** 2
    assert p_measure((0, 0), 0b01, 0, EPS) == EPS / 2


def test_p_measure_preconditions():
    with pytest.raises(PreconditionError):
        p_measure((0, 1), 0, 0, EPS)
    with pytest.raises(PreconditionError):
        p_measure((0, 0, 1), 0b011, 0b10, EPS)


def test_p_measure_is_a_probability_and_matches_blocks():
    rng = make_rng(0, "p-measure")
    for trial in range(200):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(1, m + 1))
        pi = _random_projection(rng, k, m)
        beta = int(rng.integers(1, 1 << m))
        eps = (Fraction(1, 4), Fraction(1, 16))[trial % 2]
        assert p_measure_total(pi, beta, eps) == 1
        for alpha in submasks(pi_image(pi, beta)):
            assert p_measure(pi, beta, alpha, eps) == p_measure_blockwise(pi, beta, alpha, eps)


#####################################################################################
### e3sat lemmas
#####################################################################################

def test_bb1_dictator_and_block_character():
    res = lemma_bb1_check(long_code(2, 3), (0, 1, 1), EPS)
    assert res.lhs == -EPS / 2
    assert res.rhs == EPS / 2
    assert res.passed
    res = lemma_bb1_check(character_table(0b0111, 4), (0, 0, 0, 1), EPS)
    assert res.lhs == -EPS / 2
    assert res.passed


def test_bb1_requires_folding():
    with pytest.raises(PreconditionError):
        lemma_bb1_check(constant_table(2), (0, 1), EPS)


def test_bb1_random_folded_tables():
    rng = make_rng(1, "bb1")
    for trial in range(200):
        m = int(rng.integers(1, 7))
        k = int(rng.integers(1, m + 1))
        eps = (Fraction(1, 4), Fraction(1, 16))[trial % 2]
        table = random_table(m, rng, folded=True)
        res = lemma_bb1_check(table, _random_projection(rng, k, m), eps)
        assert res.passed
        assert abs(res.lhs) <= eps / 2


def test_rt_dictators():
    pi = (1, 0, 1, 2)
    A, B = long_code(2, 3), long_code(1, 4)
    res = lemma_rt_bound(A, B, pi, EPS, R=4, T=2)
    assert res.lhs == 1 - EPS / 2
    assert res.low_degree == 1
    assert res.high_degree_small_image == 0
    assert res.passed


def test_rt_high_degree_small_image():
    pi = (0, 0, 0, 0, 1)
    A = long_code(1, 2)
    B = character_table(0b00111, 5)
    res = lemma_rt_bound(A, B, pi, EPS, R=3, T=2)
    assert res.high_degree_small_image == 1
    assert res.low_degree == 0
    assert res.lhs == 1 - EPS / 2
    assert res.passed


def test_rt_preconditions():
    A, B = long_code(1, 2), long_code(1, 2)
    with pytest.raises(PreconditionError):
        lemma_rt_bound(A, B, (0, 1), EPS, R=2, T=3)
    with pytest.raises(PreconditionError):
        lemma_rt_bound(A, B, (0, 1), EPS, R=2, T=0)
    with pytest.raises(PreconditionError):
        lemma_rt_bound(constant_table(2), B, (0, 1), EPS, R=2, T=1)
    with pytest.raises(InputError):
        lemma_rt_bound(long_code(1, 1), B, (0, 1), EPS, R=2, T=1)


def test_rt_random_folded_pairs():
    rng = make_rng(2, "rt")
    for trial in range(100):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(1, m + 1))
        R, T = ((4, 2), (8, 2))[trial % 2]
        pi = _random_projection(rng, k, m)
        A = random_table(k, rng, folded=True)
        B = random_table(m, rng, folded=True)
        assert lemma_rt_bound(A, B, pi, EPS, R, T).passed


#####################################################################################
### hypergraph and 4SS lemmas
#####################################################################################

def test_lowerbd_dictator():
    res = lemma_lowerbd_check(long_code(1, 3), (0, 1, 2))
    assert res.lhs == Fraction(1, 8)
    assert float(res.rhs) == pytest.approx(0.5 ** (3 + 2 ** 0.5))
    assert res.passed


def test_lowerbd_random_sets():
    rng = make_rng(3, "lowerbd")
    for _ in range(100):
        m = int(rng.integers(1, 5))
        k = int(rng.integers(1, m + 1))
        table = random_table(m, rng, mode="indicator")
        if table.mean() == 0:
            continue
        assert lemma_lowerbd_check(table, _random_projection(rng, k, m)).passed


def test_lowerbd_empty_set():
    with pytest.raises(PreconditionError):
        lemma_lowerbd_check(constant_table(2, 0, mode="indicator"), (0, 1))


def test_4ss_xx_random_tables():
    rng = make_rng(4, "4ss-xx")
    for trial in range(100):
        m = int(rng.integers(1, 5))
        k = int(rng.integers(1, m + 1))
        eps = (Fraction(1, 4), Fraction(1, 16))[trial % 2]
        mode = ("pm1", "indicator")[(trial // 2) % 2]
        table = random_table(m, rng, mode=mode)
        assert lemma_4ss_xx_check(table, _random_projection(rng, k, m), eps).passed


def test_4ss_xx_neighborhood():
    lc, lab = generate_planted(2, 3, 2, 2, 3, seed=5)
    for proofs in (random_proofs(lc, seed=1, left=False), long_code_proofs(lc, lab, left=False)):
        for u in range(lc.u_count):
            assert lemma_4ss_xx_neighborhood(lc, proofs, EPS, u).passed


@pytest.mark.parametrize("size", [1, 2, 3, 4])
@pytest.mark.parametrize("eps", [Fraction(1, 4), Fraction(1, 16)])
def test_4ss_tables(size, eps):
    cases, failures = fourss_table_check(size, eps)
    full = (1 << size) - 1
    assert cases == 2 * full + full * full
    assert failures == []


def test_4ss_spectral_bound():
    rng = make_rng(5, "4ss-bound")
    for _ in range(1000):
        m = int(rng.integers(1, 5))
        k = int(rng.integers(1, m + 1))
        pi_vu, pi_wu = _random_projection(rng, k, m), _random_projection(rng, k, m)
        alpha, beta = int(rng.integers(0, 1 << m)), int(rng.integers(0, 1 << m))
        assert fourss_spectral_bound_check(pi_vu, pi_wu, alpha, beta, EPS, k=k).passed
