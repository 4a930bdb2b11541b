""" E4-Set-Splitting verifier over unfolded Long Codes, and its export as weighted 4-sets

The verifier picks u uniform and neighbors v, w, reads A^v(x), A^v(x'), A^w(y),
A^w(y') with (x, x', y, y') from fourss_joint and rejects iff all four are +1.
"""
import itertools
import logging
from fractions import Fraction
from functools import partial
from collections import defaultdict

import numpy as np

from pcpforge.utils.errors import InputError, check_cap
from pcpforge.utils.misc import parse_fraction, fraction_str
from pcpforge.distributions import fourss_joint, full_support, pair_correlation
from pcpforge.reductions.common import DEFAULT_CAP_STATES, DEFAULT_SAMPLES
from pcpforge.reductions.common import run_mode, estimate, sample_queries
from pcpforge.reductions.proofs import ones_fraction

logger = logging.getLogger(__name__)

QUERIES = ("x", "x'", "y", "y'")


def _joint(lc, eps, e1, e2):
    return fourss_joint(lc.projections[e1], lc.projections[e2], eps, k=lc.k)


def _exact_size(lc):
    return sum(lc.degree_u(u) ** 2 for u in range(lc.u_count)) * 4 ** lc.k << lc.m


#####################################################################################
### verifier
#####################################################################################

def fourss_rejection(lc, proofs, eps, mode="exact", samples=DEFAULT_SAMPLES, seed=0,
                     cap=DEFAULT_CAP_STATES, workers=1):
    """ Pr[A^v(x) = A^v(x') = A^w(y) = A^w(y') = 1], exact Fraction or MonteCarloEstimate """
    proofs.check(lc)
    eps = parse_fraction(eps)

    def exact():
        check_cap(_exact_size(lc), cap, "exact 4SS rejection")
        ind = proofs.indicators("right")
        return _expectation(lc, eps, lambda v, side, flip, res: _pair_term(ind[v], True, True, flip, res))

    def sample():
        us, edge_cols, rows = sample_queries(lc, partial(_joint, lc, eps), samples, seed,
                                             "fourss", 2, workers)
        right = np.stack([t.values for t in proofs.right])
        vs = np.array([v for _, v in lc.edges], dtype=np.int64)
        v, w = vs[edge_cols[:, 0]], vs[edge_cols[:, 1]]
        rejected = ((right[v, rows[:, 0]] == 1) & (right[v, rows[:, 1]] == 1)
                    & (right[w, rows[:, 2]] == 1) & (right[w, rows[:, 3]] == 1))
        return estimate(rejected)
    return run_mode(mode, exact, sample)


def _pair_term(values, first, second, flip, res):
    """ E[f(z)^first f(z')^second] for one pair """
    if first and second:
        return pair_correlation(values, values, flip, res)
    if first or second:
        return Fraction(int(values.sum()), len(values))
    return Fraction(1)


def _expectation(lc, eps, term):
    """ E over (u, v, w) and the joint of term(v, x side) * term(w, y side)

    `term(vertex, side, flip, resample)` is the conditional expectation of the
    side "x" or "y" pair given the configuration.
    """
    memo = {}

    def cached(v, side, flip, res):
        key = (v, side, flip, res)
        if key not in memo:
            memo[key] = term(v, side, flip, res)
        return memo[key]

    total = Fraction(0)
    for w, u, e1, e2 in lc.triples():
        v, vw = lc.edges[e1][1], lc.edges[e2][1]
        inner = Fraction(0)
        for conf in _joint(lc, eps, e1, e2).configurations():
            a = cached(v, "x", conf.x_flip, conf.x_resample)
            if a:
                inner += conf.weight * a * cached(vw, "y", conf.y_flip, conf.y_resample)
        total += w * inner
    return total


def fourss_rejection_terms(lc, proofs, eps, cap=DEFAULT_CAP_STATES):
    """ the sixteen expectations E[prod_{q in S} A(q)] of the rejection expansion

    Returns:
        dict {tuple of query names: Fraction}; the rejection probability is the sum / 16
    """
    proofs.check(lc)
    eps = parse_fraction(eps)
    check_cap(16 * _exact_size(lc), cap, "4SS rejection expansion")
    values = [t.values for t in proofs.right]
    out = {}
    for picks in itertools.product((False, True), repeat=4):
        px, px2, py, py2 = picks

        def term(v, side, flip, res):
            if side == "x":
                return _pair_term(values[v], px, px2, flip, res)
            return _pair_term(values[v], py, py2, flip, res)
        out[tuple(q for q, p in zip(QUERIES, picks) if p)] = _expectation(lc, eps, term)
    return out


def rho4_benchmark(lc, proofs, eps, cap=DEFAULT_CAP_STATES):
    """ rejection next to rho^4, rho the fraction of +1 entries (report, no verdict) """
    rejection = fourss_rejection(lc, proofs, eps, mode="exact", cap=cap)
    rho = ones_fraction(proofs)
    return {"rejection": rejection, "rho": rho, "rho4": rho ** 4, "gap": rejection - rho ** 4}


#####################################################################################
### weighted 4-sets
#####################################################################################

class SetSplitInstance(object):
    """ weighted 4-sets over elements 1..n_elements (repeated elements kept)

    Arguments:
        n_elements: ground set size
        sets: sequence of (weight, (e1, e2, e3, e4)), weights positive, rescaled on ingestion to sum to 1
    """
    def __init__(self, n_elements, sets):
        self.n_elements = int(n_elements)
        self.sets = tuple((parse_fraction(w), tuple(int(e) for e in s)) for w, s in sets)
        for w, s in self.sets:
            if len(s) != 4:
                raise InputError("every set needs 4 elements, got {}".format(s))
            if w <= 0:
                raise InputError("set weights must be positive")
            if any(e < 1 or e > self.n_elements for e in s):
                raise InputError("element out of range in {}".format(s))
        if not self.sets:
            raise InputError("instance has no sets")
        total = sum((w for w, _ in self.sets), Fraction(0))
        self.sets = tuple((w / total, s) for w, s in self.sets)

    @property
    def n_sets(self):
        return len(self.sets)

    def element_array(self):
        return np.array([s for _, s in self.sets], dtype=np.int64).reshape(-1, 4) - 1

    def _sides(self, side):
        side = np.asarray(side)
        if side.shape != (self.n_elements,):
            raise InputError("partition must have {} entries".format(self.n_elements))
        return side[self.element_array()]

    def inside_weight(self, side, value=1):
        """ weight of sets lying entirely on the `value` side of a +-1 partition """
        inside = (self._sides(side) == value).all(axis=1)
        return sum((w for (w, _), i in zip(self.sets, inside) if i), Fraction(0))

    def split_weight(self, side):
        """ weight of sets meeting both sides """
        vals = self._sides(side)
        split = (vals != vals[:, :1]).any(axis=1)
        return sum((w for (w, _), s in zip(self.sets, split) if s), Fraction(0))

    def expected_random_value(self):
        """ exact expected split weight under a uniform random partition """
        return sum((w * (1 - Fraction(2, 2 ** len(set(s)))) for w, s in self.sets), Fraction(0))

    def to_text(self):
        lines = ["p setsplit {} {}".format(self.n_elements, self.n_sets)]
        for w, s in self.sets:
            lines.append("{} {} {} {} {} {}".format(w.numerator, w.denominator, *s))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "SetSplitInstance(elements={}, sets={})".format(self.n_elements, self.n_sets)


def export_4ss_instance(lc, eps, cap=DEFAULT_CAP_STATES):
    """ one 4-set per verifier outcome; element v * 2^m + t + 1 is position t of A^v """
    eps = parse_fraction(eps)
    needed = sum(lc.degree_u(u) ** 2 for u in range(lc.u_count)) << (4 * lc.m)
    check_cap(needed, cap, "4-set enumeration")
    size = 1 << lc.m
    sets = defaultdict(Fraction)
    for w, u, e1, e2 in lc.triples():
        v, vw = lc.edges[e1][1], lc.edges[e2][1]
        for (x, x2, y, y2), p in full_support(_joint(lc, eps, e1, e2), cap).items():
            key = tuple(sorted((v * size + x + 1, v * size + x2 + 1, vw * size + y + 1, vw * size + y2 + 1)))
            sets[key] += w * p
    logger.info("exported {} weighted 4-sets (eps={})".format(len(sets), fraction_str(eps)))
    return SetSplitInstance(lc.v_count * size, [(w, s) for s, w in sorted(sets.items())])


def partition_from_proofs(lc, proofs):
    """ +-1 side of every element, read off the right tables """
    proofs.check(lc)
    return np.concatenate([t.values for t in proofs.right])
