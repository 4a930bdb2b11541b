""" Gamma coefficients E[chi_alpha(x x')] and the spectral sums built on them """
import itertools
from fractions import Fraction
from collections import namedtuple, defaultdict

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import popcount, to_mask, mask_bits, parse_fraction
from pcpforge.boolean_fourier import wht
from pcpforge.distributions import (
    hypergraph_joint, char_expectation_hypergraph, pair_rule_marginal, pair_correlation,
    FLIP, INDEPENDENT,
)

GammaReport = namedtuple("GammaReport", ["alpha", "pi_image", "pi_odd", "closed_form", "brute_force"])

SELF_KINDS = ("hypergraph", "e3sat", "fourss")


def _check(pi, alpha):
    alpha = to_mask(alpha)
    if alpha >> len(pi):
        raise InputError("mask {} outside [m], m={}".format(alpha, len(pi)))
    return alpha


def pi_image(pi, alpha):
    """ pi(alpha) as a mask over [k] """
    alpha = _check(pi, alpha)
    out = 0
    for j in mask_bits(alpha):
        out |= 1 << pi[j]
    return out


def pi_odd(pi, alpha):
    """ blocks i of pi(alpha) hit an odd number of times by alpha """
    alpha = _check(pi, alpha)
    out = 0
    for j in mask_bits(alpha):
        out ^= 1 << pi[j]
    return out


def gamma_closed_form(pi, alpha):
    """ (-1)^|pi_odd(alpha)| / 2^|pi(alpha)| """
    return Fraction((-1) ** popcount(pi_odd(pi, alpha)), 2 ** popcount(pi_image(pi, alpha)))


def gamma(pi, alpha, k=None):
    """ closed form next to the blockwise expectation under the hypergraph joint

    The partner copy is a single coordinate projected onto block 0; its masks are empty.
    """
    alpha = _check(pi, alpha)
    k = max(pi) + 1 if k is None else k
    dist = hypergraph_joint(pi, [0], k=k)
    brute = char_expectation_hypergraph(dist, alpha, alpha, 0, 0)
    return GammaReport(alpha, pi_image(pi, alpha), pi_odd(pi, alpha), gamma_closed_form(pi, alpha), brute)


def pair_coefficient(pi, alpha, kind, eps=None):
    """ E[chi_alpha(z z')] for one pair of the given verifier kind

    hypergraph: Gamma; e3sat / fourss: (1 - eps/2)^(r - r') (-eps/2)^r'
    """
    if kind == "hypergraph":
        return gamma_closed_form(pi, alpha)
    if kind not in SELF_KINDS:
        raise InputError("unknown kind {!r}".format(kind))
    eps = parse_fraction(eps)
    r, r_odd = popcount(pi_image(pi, alpha)), popcount(pi_odd(pi, alpha))
    return (1 - eps / 2) ** (r - r_odd) * (-eps / 2) ** r_odd


def _spectrum(table):
    return table if hasattr(table, "squared") else wht(table)


def self_correlation(table, pi, kind="hypergraph", eps=None):
    """ sum_alpha A_alpha^2 E[chi_alpha(z z')] = E[A(z) A(z')] """
    spec = _spectrum(table)
    if spec.dim != len(pi):
        raise InputError("table dimension {} does not match projection length {}".format(spec.dim, len(pi)))
    total = Fraction(0)
    for alpha in spec.support():
        total += spec.squared(alpha) * pair_coefficient(pi, alpha, kind, eps)
    return total


def direct_self_correlation(table, pi, kind="hypergraph", eps=None):
    """ E[A(z) A(z')] by conditioning on the per-block pair rule """
    k = max(pi) + 1
    masks = [0] * k
    for j, i in enumerate(pi):
        masks[i] |= 1 << j
    law = pair_rule_marginal(kind, eps)
    total = Fraction(0)
    for combo in itertools.product(law, repeat=k):
        weight, flip, res = Fraction(1), 0, 0
        for mask, (w, rule) in zip(masks, combo):
            weight *= w
            if rule == FLIP:
                flip |= mask
            elif rule == INDEPENDENT:
                res |= mask
        total += weight * pair_correlation(table, table, flip, res)
    return total


def cross_weight(spec_a, spec_b, pi_vu, pi_wu, R):
    """ sum of A_alpha^2 B_beta^2 over |alpha|, |beta| < R with intersecting images """
    def by_image(spec, pi):
        out = defaultdict(Fraction)
        for alpha in spec.support():
            if popcount(alpha) < R:
                out[pi_image(pi, alpha)] += spec.squared(alpha)
        return out
    a, b = by_image(spec_a, pi_vu), by_image(spec_b, pi_wu)
    total = Fraction(0)
    for ia, wa in a.items():
        for ib, wb in b.items():
            if ia & ib:
                total += wa * wb
    return total
