""" helpers shared by the three verifiers: modes, caps and Monte Carlo plumbing """
import math
from collections import namedtuple
from functools import partial

import numpy as np

from pcpforge.utils.errors import InputError, SizeError
from pcpforge.utils.exp_utils import pmap
from pcpforge.utils.rng import make_rng, chunk_sizes, CHUNK
from pcpforge.distributions import sample_many

DEFAULT_CAP_STATES = 1 << 24
DEFAULT_SAMPLES = 100000
MODES = ("exact", "sample", "auto")

MonteCarloEstimate = namedtuple("MonteCarloEstimate", ["value", "stderr", "samples"])


def check_mode(mode):
    if mode not in MODES:
        raise InputError("unknown mode {!r}, expected one of {}".format(mode, MODES))
    return mode


def run_mode(mode, exact_fn, sample_fn):
    """ exact_fn() in exact mode, sample_fn() in sample mode, exact with fallback in auto """
    check_mode(mode)
    if mode == "sample":
        return sample_fn()
    try:
        return exact_fn()
    except SizeError:
        if mode == "exact":
            raise
        return sample_fn()


def estimate(hits):
    """ mean and standard error of a 0/1 sample vector """
    n = len(hits)
    if n == 0:
        raise InputError("Monte Carlo estimate needs at least one sample")
    p = float(np.mean(hits))
    return MonteCarloEstimate(p, math.sqrt(max(p * (1 - p), 0.0) / n), n)


def draw_neighbors(lc, size, rng, count):
    """ u uniform, then `count` independent uniform incident edges of u

    Returns:
        [u array, edge array, ...] each of length size
    """
    deg = np.array([lc.degree_u(u) for u in range(lc.u_count)], dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(deg)[:-1]]).astype(np.int64)
    flat = np.array([e for u in range(lc.u_count) for e in lc.edges_of_u(u)], dtype=np.int64)
    us = rng.integers(0, lc.u_count, size=size)
    out = [us]
    for _ in range(count):
        pick = np.minimum((rng.random(size) * deg[us]).astype(np.int64), deg[us] - 1)
        out.append(flat[offsets[us] + pick])
    return out


def _query_chunk(args, lc, make_joint, seed, label, count):
    c, size = args
    draws = draw_neighbors(lc, size, make_rng(seed, label, "draws", c), count)
    edge_cols = np.stack(draws[1:], axis=1)
    keys, inverse = np.unique(edge_cols, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    rows = None
    for g, key in enumerate(keys):
        key = tuple(int(e) for e in key)
        sel = np.nonzero(inverse == g)[0]
        q = sample_many(make_joint(*key), len(sel), seed, labels=(label, c) + key)
        if rows is None:
            rows = np.zeros((size, q.shape[1]), dtype=np.int64)
        rows[sel] = q
    return draws[0], edge_cols, rows


def sample_queries(lc, make_joint, n, seed, label, count, workers=1):
    """ n verifier draws: (u, edge columns, query rows), reproducible for any worker count

    Arguments:
        make_joint: picklable callable edge indices -> BlockFactoredDistribution
        count: 1 (u and one neighbor) or 2 (u and two neighbors)
    """
    chunks = list(enumerate(chunk_sizes(n, CHUNK)))
    fn = partial(_query_chunk, lc=lc, make_joint=make_joint, seed=seed, label=label, count=count)
    parts = pmap(fn, chunks, workers)
    if not parts:
        raise InputError("Monte Carlo estimate needs at least one sample")
    us = np.concatenate([p[0] for p in parts])
    edges = np.concatenate([p[1] for p in parts])
    rows = np.concatenate([p[2] for p in parts])
    return us, edges, rows
