""" E3-SAT verifier over folded Long Codes, and its export as a weighted 3-CNF

The verifier picks u uniform and one neighbor v, reads A^u(x), A^v(y), A^v(y')
with (x, y, y') from e3sat_joint and accepts unless all three are +1.
"""
import logging
from fractions import Fraction
from functools import partial
from collections import defaultdict

import numpy as np

from pcpforge.utils.errors import InputError, PreconditionError, check_cap
from pcpforge.utils.misc import parse_fraction, fraction_str
from pcpforge.distributions import e3sat_joint, full_support, pair_correlation
from pcpforge.reductions.common import DEFAULT_CAP_STATES, DEFAULT_SAMPLES
from pcpforge.reductions.common import run_mode, estimate, sample_queries

logger = logging.getLogger(__name__)


def _joint(lc, eps, e):
    return e3sat_joint(lc.projections[e], eps, k=lc.k)


def _require_folded(lc, proofs):
    if not proofs.folded:
        raise PreconditionError("the E3-SAT verifier reads folded Long Codes")
    proofs.check(lc, need_left=True)


#####################################################################################
### verifier
#####################################################################################

def e3sat_acceptance(lc, proofs, eps, mode="exact", samples=DEFAULT_SAMPLES, seed=0,
                     cap=DEFAULT_CAP_STATES, workers=1):
    """ acceptance probability, exact Fraction or MonteCarloEstimate

    Exact mode conditions on x and the per-block branch (3^k configurations per
    edge) and needs |E| * 3^k * 2^m <= cap.
    """
    _require_folded(lc, proofs)
    eps = parse_fraction(eps)

    def exact():
        return 1 - _rejection_exact(lc, proofs, eps, cap)

    def sample():
        us, edge_cols, rows = sample_queries(lc, partial(_joint, lc, eps), samples, seed,
                                             "e3sat", 1, workers)
        left = np.stack([t.values for t in proofs.left])
        right = np.stack([t.values for t in proofs.right])
        v = np.array([v for _, v in lc.edges], dtype=np.int64)[edge_cols[:, 0]]
        rejected = (left[us, rows[:, 0]] == 1) & (right[v, rows[:, 1]] == 1) & (right[v, rows[:, 2]] == 1)
        return estimate(~rejected)
    return run_mode(mode, exact, sample)


def _rejection_exact(lc, proofs, eps, cap):
    check_cap(lc.n_edges * 3 ** lc.k << lc.m, cap, "exact E3-SAT acceptance")
    a = proofs.indicators("left")
    b = proofs.indicators("right")
    memo = {}

    def corr(v, flip, res):
        key = (v, flip, res)
        if key not in memo:
            memo[key] = pair_correlation(b[v], b[v], flip, res)
        return memo[key]

    total = Fraction(0)
    for e, ((u, v), w) in enumerate(zip(lc.edges, lc.edge_weights())):
        inner = Fraction(0)
        for conf in _joint(lc, eps, e).configurations():
            if a[u][conf.x_negative]:
                inner += conf.weight * corr(v, conf.y_flip, conf.y_resample)
        total += w * inner
    return total


#####################################################################################
### weighted CNF
#####################################################################################

class CnfInstance(object):
    """ weighted 3-literal clauses over variables 1..n_vars, DIMACS signs

    Arguments:
        n_vars: number of variables
        clauses: sequence of (weight, (l1, l2, l3)), weights positive, rescaled on ingestion to sum to 1
    """
    def __init__(self, n_vars, clauses):
        self.n_vars = int(n_vars)
        self.clauses = tuple((parse_fraction(w), tuple(int(l) for l in lits)) for w, lits in clauses)
        for w, lits in self.clauses:
            if len(lits) != 3:
                raise InputError("every clause needs 3 literals, got {}".format(lits))
            if w <= 0:
                raise InputError("clause weights must be positive")
            if any(l == 0 or abs(l) > self.n_vars for l in lits):
                raise InputError("literal out of range in {}".format(lits))
        if not self.clauses:
            raise InputError("cnf has no clauses")
        total = sum((w for w, _ in self.clauses), Fraction(0))
        self.clauses = tuple((w / total, lits) for w, lits in self.clauses)

    @property
    def n_clauses(self):
        return len(self.clauses)

    def literal_arrays(self):
        """ (variable index 0-based, positive flag) arrays of shape (clauses, 3) """
        lits = np.array([lits for _, lits in self.clauses], dtype=np.int64).reshape(-1, 3)
        return np.abs(lits) - 1, lits > 0

    def satisfied(self, assignment):
        """ per-clause flag under a boolean assignment (index j <-> variable j+1) """
        assignment = np.asarray(assignment, dtype=bool)
        if assignment.shape != (self.n_vars,):
            raise InputError("assignment must have {} entries".format(self.n_vars))
        var, positive = self.literal_arrays()
        return (assignment[var] == positive).any(axis=1)

    def weight_satisfied(self, assignment):
        sat = self.satisfied(assignment)
        return sum((w for (w, _), s in zip(self.clauses, sat) if s), Fraction(0))

    def expected_random_value(self):
        """ exact expected satisfied weight under a uniform assignment """
        total = Fraction(0)
        for w, lits in self.clauses:
            if any(-l in lits for l in lits):
                total += w
            else:
                total += w * (1 - Fraction(1, 2 ** len(set(lits))))
        return total

    def to_text(self):
        lines = ["p wcnf {} {}".format(self.n_vars, self.n_clauses)]
        for w, lits in self.clauses:
            lines.append("{} {} {} {} {} 0".format(w.numerator, w.denominator, *lits))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "CnfInstance(vars={}, clauses={})".format(self.n_vars, self.n_clauses)


def _literal(offset, t, dim):
    """ literal reading position t of a folded table whose variables start at offset """
    rep = t if t & 1 == 0 else t ^ ((1 << dim) - 1)
    var = offset + (rep >> 1) + 1
    return var if rep == t else -var


def variable_offsets(lc):
    """ (left offset per u, right offset per v, total variables) """
    left_block, right_block = 1 << (lc.k - 1), 1 << (lc.m - 1)
    left = [u * left_block for u in range(lc.u_count)]
    base = lc.u_count * left_block
    right = [base + v * right_block for v in range(lc.v_count)]
    return left, right, base + lc.v_count * right_block


def export_e3sat_cnf(lc, eps, cap=DEFAULT_CAP_STATES):
    """ one clause per verifier outcome, identical clauses merged

    Variable for a folded position pair is true iff the table reads -1 at the
    representative (index bit 0 clear); reading the antipode negates the literal.
    """
    eps = parse_fraction(eps)
    check_cap(lc.n_edges << (lc.k + 2 * lc.m), cap, "E3-SAT clause enumeration")
    left, right, n_vars = variable_offsets(lc)
    clauses = defaultdict(Fraction)
    for e, ((u, v), w) in enumerate(zip(lc.edges, lc.edge_weights())):
        for (x, y, y2), p in full_support(_joint(lc, eps, e), cap).items():
            lits = (_literal(left[u], x, lc.k), _literal(right[v], y, lc.m), _literal(right[v], y2, lc.m))
            clauses[tuple(sorted(lits))] += w * p
    logger.info("exported {} clauses over {} variables (eps={})".format(
        len(clauses), n_vars, fraction_str(eps)))
    return CnfInstance(n_vars, [(w, lits) for lits, w in sorted(clauses.items())])


def assignment_from_proofs(lc, proofs):
    """ variable values read off folded proofs """
    _require_folded(lc, proofs)
    parts = [t.values[0::2] == -1 for t in proofs.left] + [t.values[0::2] == -1 for t in proofs.right]
    return np.concatenate(parts)
