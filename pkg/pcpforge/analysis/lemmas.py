""" checkers for the inequalities the soundness analyses rest on

Each checker returns a CheckResult(lhs, rhs, passed); exact rationals stay
Fractions, irrational thresholds are Decimals at 256-bit precision compared with
a 1e-12 slack.
"""
from fractions import Fraction
from collections import namedtuple

from pcpforge.utils.errors import PreconditionError, InputError
from pcpforge.utils.misc import (
    popcount, to_mask, submasks, parse_fraction, to_decimal, dec_sqrt, dec_pow, DECIMAL_CONTEXT, SLACK,
)
from pcpforge.boolean_fourier import wht
from pcpforge.distributions import e3sat_joint, fourss_joint, char_expectation_e3sat, char_expectation_4ss
from pcpforge.analysis.gamma import pi_image, pi_odd, self_correlation

CheckResult = namedtuple("CheckResult", ["lhs", "rhs", "passed"])
RtReport = namedtuple("RtReport", ["lhs", "rhs", "passed", "low_degree", "high_degree_small_image", "noise"])

SQRT2 = dec_sqrt(2)
# exponent of the mixing lower bound at rho = 1/2
C1 = DECIMAL_CONTEXT.divide(DECIMAL_CONTEXT.subtract(DECIMAL_CONTEXT.multiply(2, SQRT2), 1),
                          DECIMAL_CONTEXT.subtract(SQRT2, 1))


def _k_of(pi, k):
    return max(pi) + 1 if k is None else k


#####################################################################################
### p_beta(alpha)
#####################################################################################

def p_measure(pi, beta, alpha, eps):
    """ (eps/2)^r' (1 - eps/2)^(r - r'), r = |pi(beta)|, r' = |alpha xor pi_odd(beta)| """
    beta, alpha, eps = to_mask(beta), to_mask(alpha), parse_fraction(eps)
    if beta == 0:
        raise PreconditionError("p_measure is defined for non-empty beta only")
    image = pi_image(pi, beta)
    if alpha & ~image:
        raise PreconditionError("alpha must lie inside pi(beta)")
    r, r_diff = popcount(image), popcount(alpha ^ pi_odd(pi, beta))
    return (eps / 2) ** r_diff * (1 - eps / 2) ** (r - r_diff)


def p_measure_blockwise(pi, beta, alpha, eps, k=None):
    """ |E[chi_alpha(x) chi_beta(y) chi_beta(y')]| from the e3sat block values """
    dist = e3sat_joint(pi, eps, k=_k_of(pi, k))
    return abs(char_expectation_e3sat(dist, to_mask(alpha), to_mask(beta), to_mask(beta)))


def p_measure_total(pi, beta, eps):
    """ sum over alpha inside pi(beta), exactly 1 """
    return sum((p_measure(pi, beta, a, eps) for a in submasks(pi_image(pi, beta))), Fraction(0))


#####################################################################################
### e3sat lemmas
#####################################################################################

def _require_folded(*tables):
    for t in tables:
        if not t.is_folded():
            raise PreconditionError("table must be folded")


def lemma_bb1_check(B, pi, eps, k=None):
    """ E[B(y) B(y')] over the e3sat joint, |value| <= eps/2 """
    _require_folded(B)
    eps = parse_fraction(eps)
    dist = e3sat_joint(pi, eps, k=_k_of(pi, k))
    spec = wht(B)
    value = Fraction(0)
    for beta in spec.support():
        if popcount(beta) % 2:
            value += spec.squared(beta) * char_expectation_e3sat(dist, 0, beta, beta)
    return CheckResult(value, eps / 2, abs(value) <= eps / 2)


def lemma_rt_bound(A, B, pi, eps, R, T):
    """ |E[A(x) B(y) B(y')]| against the three-term low degree / small image / noise bound """
    if not 1 <= T <= R:
        raise PreconditionError("need R >= T >= 1, got R={} T={}".format(R, T))
    _require_folded(A, B)
    eps = parse_fraction(eps)
    if A.dim <= max(pi) or B.dim != len(pi):
        raise InputError("tables of dimension {} and {} do not fit the projection".format(A.dim, B.dim))
    dist = e3sat_joint(pi, eps, k=A.dim)
    spec_a, spec_b = wht(A), wht(B)
    lhs = Fraction(0)
    low = Fraction(0)
    mid = Fraction(0)
    support_a = spec_a.support()
    for beta in spec_b.support():
        sq_b = spec_b.squared(beta)
        image = pi_image(pi, beta)
        for alpha in support_a:
            if alpha & ~image:
                continue
            lhs += spec_a.coeff(alpha) * sq_b * char_expectation_e3sat(dist, alpha, beta, beta)
            if popcount(alpha) % 2 and popcount(beta) % 2 and popcount(beta) < R:
                low += spec_a.squared(alpha) * sq_b
        if popcount(beta) >= R and popcount(image) < T:
            mid += sq_b
    lhs = abs(lhs)
    noise = dec_pow(1 - eps / 2, Fraction(T, 2))
    rhs = DECIMAL_CONTEXT.add(DECIMAL_CONTEXT.add(dec_sqrt(low), to_decimal(mid)), noise)
    return RtReport(lhs, rhs, to_decimal(lhs) <= DECIMAL_CONTEXT.add(rhs, SLACK), low, mid, noise)


#####################################################################################
### hypergraph and 4SS lemmas
#####################################################################################

def lemma_lowerbd_check(A, pi):
    """ E[A(x) A(x')] >= mu(A)^c1 for an indicator A under the hypergraph pair """
    if A.mode != "indicator":
        A = A.to_indicator()
    mu = A.mean()
    if mu == 0:
        raise PreconditionError("the indicator must be non-empty")
    lhs = self_correlation(A, pi, "hypergraph")
    rhs = dec_pow(mu, C1)
    return CheckResult(lhs, rhs, to_decimal(lhs) >= DECIMAL_CONTEXT.subtract(rhs, SLACK))


def lemma_4ss_xx_check(A, pi, eps):
    """ E[A(x) A(x')] >= E[A]^2 - eps/2 under the 4SS pair rule """
    eps = parse_fraction(eps)
    lhs = self_correlation(A, pi, "fourss", eps)
    rhs = A.mean() ** 2 - eps / 2
    return CheckResult(lhs, rhs, lhs >= rhs)


def lemma_4ss_xx_neighborhood(lc, proofs, eps, u):
    """ the same bound averaged over the neighbors of u, with p_u = E_v[E[A_v]] """
    proofs.check(lc)
    eps = parse_fraction(eps)
    edges = lc.edges_of_u(u)
    lhs, p_u = Fraction(0), Fraction(0)
    for e in edges:
        table = proofs.right[lc.edges[e][1]]
        lhs += self_correlation(table, lc.projections[e], "fourss", eps)
        p_u += table.mean()
    lhs /= len(edges)
    p_u /= len(edges)
    rhs = p_u ** 2 - eps / 2
    return CheckResult(lhs, rhs, lhs >= rhs)


def fourss_table_check(size, eps):
    """ every non-empty J, K inside one block of `size` coordinates on each side

    Returns:
        (cases, failures) where failures lists (J, K, computed, expected)
    """
    eps = parse_fraction(eps)
    dist = fourss_joint([0] * size, [0] * size, eps)
    full = (1 << size) - 1
    cases, failures = 0, []

    def expect_j(J):
        return 1 - eps / 2 if popcount(J) % 2 == 0 else -eps / 2

    def expect_jk(J, K):
        pj, pk = popcount(J) % 2, popcount(K) % 2
        if pj != pk:
            return Fraction(0)
        return -(1 - eps) if pj else 1 - eps

    for J in range(1, full + 1):
        for got, want in ((char_expectation_4ss(dist, J, J, 0, 0), expect_j(J)),
                          (char_expectation_4ss(dist, 0, 0, J, J), expect_j(J))):
            cases += 1
            if got != want:
                failures.append((J, 0, got, want))
        for K in range(1, full + 1):
            got, want = char_expectation_4ss(dist, J, J, K, K), expect_jk(J, K)
            cases += 1
            if got != want:
                failures.append((J, K, got, want))
    return cases, failures


def fourss_spectral_bound_check(pi_vu, pi_wu, alpha, beta, eps, k=None):
    """ |E[chi_alpha(xx') chi_beta(yy')]| <= (1 - eps/2)^max(|pi_vu(alpha)|, |pi_wu(beta)|) """
    eps = parse_fraction(eps)
    alpha, beta = to_mask(alpha), to_mask(beta)
    k = max(max(pi_vu), max(pi_wu)) + 1 if k is None else k
    dist = fourss_joint(pi_vu, pi_wu, eps, k=k)
    lhs = abs(char_expectation_4ss(dist, alpha, alpha, beta, beta))
    rhs = (1 - eps / 2) ** max(popcount(pi_image(pi_vu, alpha)), popcount(pi_image(pi_wu, beta)))
    return CheckResult(lhs, rhs, lhs <= rhs)
