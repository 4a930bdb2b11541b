import math
import logging
from fractions import Fraction
from functools import partial

import numpy as np

from pcpforge.utils.errors import InputError, check_cap
from pcpforge.utils.exp_utils import pmap
from pcpforge.utils.rng import make_rng
from pcpforge.label_cover.game import Labeling

DEFAULT_CAP_STATES = 1 << 24
BRUTE_CHUNK = 1 << 16

logger = logging.getLogger(__name__)


#####################################################################################
### brute force optimum
#####################################################################################

def _right_labelings(start, stop, m, v_count):
    """ rows start..stop-1 of the lexicographic enumeration of [m]^v_count """
    idx = np.arange(start, stop, dtype=np.int64)
    labels = np.zeros((len(idx), v_count), dtype=np.int64)
    for v in range(v_count - 1, -1, -1):
        labels[:, v] = idx % m
        idx = idx // m
    return labels


def _best_in_chunk(bounds, inst):
    """ (satisfied edge count, row index) of the best right labeling in a chunk """
    start, stop = bounds
    labels = _right_labelings(start, stop, inst.m, inst.v_count)
    total = np.zeros(len(labels), dtype=np.int64)
    for u in range(inst.u_count):
        votes = np.zeros((len(labels), inst.k), dtype=np.int64)
        for e in inst.edges_of_u(u):
            pi = np.asarray(inst.projections[e], dtype=np.int64)
            wanted = pi[labels[:, inst.edges[e][1]]]
            votes[np.arange(len(labels)), wanted] += 1
        total += votes.max(axis=1)
    best = int(np.argmax(total))
    return int(total[best]), start + best


def majority_left_labels(inst, right):
    """ per u, the left label agreeing with most incident projections (ties -> smallest) """
    left = []
    for u in range(inst.u_count):
        votes = [0] * inst.k
        for e in inst.edges_of_u(u):
            votes[inst.projections[e][right[inst.edges[e][1]]]] += 1
        left.append(votes.index(max(votes)))
    return left


def optimum_bruteforce(inst, cap=DEFAULT_CAP_STATES, workers=1):
    """ exact optimum over all right labelings, left labels by majority vote

    Returns:
        (Fraction, Labeling); ties go to the lexicographically smallest right labeling
    """
    n_states = inst.m ** inst.v_count
    check_cap(n_states, cap, "right labeling space")
    chunks = [(s, min(s + BRUTE_CHUNK, n_states)) for s in range(0, n_states, BRUTE_CHUNK)]
    results = pmap(partial(_best_in_chunk, inst=inst), chunks, workers)
    # first chunk holding the maximum keeps the lexicographic tie-break
    best_count, best_row = max(results, key=lambda r: (r[0], -r[1]))
    right = [int(l) for l in _right_labelings(best_row, best_row + 1, inst.m, inst.v_count)[0]]
    labeling = Labeling(majority_left_labels(inst, right), right)
    logger.debug("brute force over %d right labelings: %d/%d", n_states, best_count, inst.n_edges)
    return Fraction(best_count, inst.n_edges), labeling


#####################################################################################
### projection expansion
#####################################################################################

def projection_expansion_stats(inst, set_size, trials, seed=0):
    """ empirical E[|pi_vu(S)|^-1] over random v, random S of size `set_size`, random neighbor u

    Returns a report dict (no pass/fail):
        mean: exact empirical mean, fitted_c0: largest c0 with mean <= |S|^(-2 c0)
    """
    if not 1 <= set_size <= inst.m:
        raise InputError("set_size must lie in [1, m], got {}".format(set_size))
    if trials < 1:
        raise InputError("trials must be positive")
    rng = make_rng(seed, "expansion", set_size)
    total = Fraction(0)
    for _ in range(trials):
        v = int(rng.integers(inst.v_count))
        subset = rng.choice(inst.m, size=set_size, replace=False)
        es = inst.edges_of_v(v)
        pi = inst.projections[es[int(rng.integers(len(es)))]]
        total += Fraction(1, len(set(pi[int(j)] for j in subset)))
    mean = total / trials
    if set_size == 1:
        c0 = 0.0
    else:
        c0 = -math.log(float(mean)) / (2.0 * math.log(set_size))
    return {"set_size": set_size, "trials": trials, "mean": mean, "fitted_c0": c0}
