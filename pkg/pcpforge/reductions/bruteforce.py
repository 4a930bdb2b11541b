""" exhaustive optima of exported instances (desk-scale oracles) """
import math
from fractions import Fraction

import numpy as np

from pcpforge.utils.errors import InputError, check_cap
from pcpforge.reductions.common import DEFAULT_CAP_STATES
from pcpforge.reductions.e3sat import CnfInstance
from pcpforge.reductions.set_splitting import SetSplitInstance
from pcpforge.reductions.hypergraph import HypergraphInstance

CELLS = 1 << 22     # scratch entries per chunk


def _scaled_weights(weights):
    """ integer numerators over a common denominator """
    den = 1
    for w in weights:
        den = math.lcm(den, w.denominator)
    dtype = np.int64 if den < (1 << 62) else object
    return np.array([w.numerator * (den // w.denominator) for w in weights], dtype=dtype), den


def _bits(start, stop, n):
    idx = np.arange(start, stop, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


def _search(n, score, cap, width):
    """ (best score, index) over all 2^n bit vectors, ties -> smallest index

    `width` is the scratch size per candidate, chunks hold about CELLS entries.
    """
    check_cap(1 << n, cap, "brute-force solution space")
    best, arg = None, 0
    chunk = max(1, min(1 << n, CELLS // max(width, n, 1)))
    for start in range(0, 1 << n, chunk):
        scores = score(_bits(start, min(start + chunk, 1 << n), n))
        i = int(np.argmax(scores))
        if best is None or scores[i] > best:
            best, arg = scores[i], start + i
    return best, arg


def _cnf_optimum(cnf, cap):
    weights, den = _scaled_weights([w for w, _ in cnf.clauses])
    var, positive = cnf.literal_arrays()

    def score(bits):
        sat = (bits[:, var] == positive).any(axis=2)
        return sat.astype(weights.dtype) @ weights
    best, arg = _search(cnf.n_vars, score, cap, 3 * cnf.n_clauses)
    return Fraction(int(best), den), _bits(arg, arg + 1, cnf.n_vars)[0]


def _split_optimum(inst, cap):
    weights, den = _scaled_weights([w for w, _ in inst.sets])
    elements = inst.element_array()

    def score(bits):
        vals = bits[:, elements]
        split = (vals != vals[:, :, :1]).any(axis=2)
        return split.astype(weights.dtype) @ weights
    best, arg = _search(inst.n_elements, score, cap, 4 * inst.n_sets)
    side = np.where(_bits(arg, arg + 1, inst.n_elements)[0], -1, 1)
    return Fraction(int(best), den), side


def _independent_optimum(h, cap):
    n = h.vertex_count
    if n > 62:
        check_cap(1 << n, cap, "brute-force independent sets")
    masks = np.array(sorted(set(sum(1 << i for i in set(key)) for key in h.edges())), dtype=np.int64)

    def score(bits):
        idx = (bits.astype(np.int64) << np.arange(n, dtype=np.int64)).sum(axis=1)
        ok = ~((idx[:, None] & masks[None, :]) == masks[None, :]).any(axis=1)
        return np.where(ok, bits.sum(axis=1), -1)
    best, arg = _search(n, score, cap, len(masks))
    return Fraction(int(best), n), _bits(arg, arg + 1, n)[0]


def max_solution_bruteforce(instance, cap=DEFAULT_CAP_STATES):
    """ exact optimum with a witness

    Returns:
        CnfInstance -> (max satisfied weight, boolean assignment)
        SetSplitInstance -> (max split weight, +-1 partition)
        HypergraphInstance -> (max independent set size / vertex count, membership array)
    """
    if isinstance(instance, CnfInstance):
        return _cnf_optimum(instance, cap)
    if isinstance(instance, SetSplitInstance):
        return _split_optimum(instance, cap)
    if isinstance(instance, HypergraphInstance):
        return _independent_optimum(instance, cap)
    raise InputError("no brute-force oracle for {}".format(type(instance).__name__))
