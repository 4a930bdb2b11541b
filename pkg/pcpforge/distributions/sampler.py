""" Monte Carlo counterparts of the exact distributions

Samples are drawn in chunks of `CHUNK`; chunk c of a stream uses the Philox key
(seed, "sample", *labels, c) and every block consumes a fixed set of draws, so
outputs depend only on (seed, labels, n), never on the worker count.
"""
from collections import namedtuple
from functools import partial

import numpy as np

from pcpforge.utils.exp_utils import pmap
from pcpforge.utils.misc import mask_bits
from pcpforge.utils.rng import make_rng, chunk_sizes, CHUNK
from pcpforge.distributions.blocks import FLIP, COPY
from pcpforge.distributions.oracle import full_support

QuadQuery = namedtuple("QuadQuery", ["x", "x_prime", "y", "y_prime"])
TripleQuery = namedtuple("TripleQuery", ["x", "y", "y_prime"])


def _spread(bits, mask):
    """ (N, popcount) 0/1 draws -> (N,) integers with the bits placed on `mask` """
    out = np.zeros(bits.shape[0], dtype=np.int64)
    for q, b in enumerate(mask_bits(mask)):
        out |= bits[:, q].astype(np.int64) << b
    return out


def _second(rule, first, fresh, mask):
    if rule == FLIP:
        return first ^ mask
    if rule == COPY:
        return first
    return fresh


def _sample_chunk(args, dist, seed, labels):
    c, size = args
    rng = make_rng(seed, "sample", *labels, c)
    x1 = np.zeros(size, dtype=np.int64)
    x2 = np.zeros(size, dtype=np.int64)
    y1 = np.zeros(size, dtype=np.int64)
    y2 = np.zeros(size, dtype=np.int64)
    for block in dist.blocks:
        nx, ny = len(mask_bits(block.x_mask)), len(mask_bits(block.y_mask))
        u = rng.random(size)
        bx1 = _spread(rng.integers(0, 2, size=(size, nx)), block.x_mask)
        bx2 = _spread(rng.integers(0, 2, size=(size, nx)), block.x_mask)
        by1 = _spread(rng.integers(0, 2, size=(size, ny)), block.y_mask)
        by2 = _spread(rng.integers(0, 2, size=(size, ny)), block.y_mask)
        cum = np.cumsum([float(br.weight) for br in block.branches])
        choice = np.minimum(np.searchsorted(cum, u, side="right"), len(cum) - 1)
        for b, br in enumerate(block.branches):
            sel = choice == b
            if not sel.any():
                continue
            if br.x_value is None:
                x1[sel] |= bx1[sel]
                x2[sel] |= _second(br.x_rule, bx1[sel], bx2[sel], block.x_mask)
            elif br.x_value == -1:
                x1[sel] |= block.x_mask
            y1[sel] |= by1[sel]
            y2[sel] |= _second(br.y_rule, by1[sel], by2[sel], block.y_mask)
    if dist.kind == "e3sat":
        return np.stack([x1, y1, y2], axis=1)
    return np.stack([x1, x2, y1, y2], axis=1)


def sample_many(dist, n, seed, labels=(), workers=1):
    """ n query tuples as an (n, 3 or 4) array of cube indices """
    chunks = list(enumerate(chunk_sizes(n, CHUNK)))
    parts = pmap(partial(_sample_chunk, dist=dist, seed=seed, labels=tuple(labels)), chunks, workers)
    if not parts:
        return np.zeros((0, len(dist.components)), dtype=np.int64)
    return np.concatenate(parts, axis=0)


def sample(dist, seed, labels=()):
    """ one query tuple (QuadQuery or TripleQuery of cube indices) """
    row = [int(v) for v in sample_many(dist, 1, seed, labels)[0]]
    if dist.kind == "e3sat":
        return TripleQuery(*row)
    return QuadQuery(*row)


def empirical_tv(samples, exact):
    """ total variation between the empirical law of sample rows and an exact law """
    n = len(samples)
    rows, freq = np.unique(np.asarray(samples), axis=0, return_counts=True)
    counts = {tuple(int(v) for v in row): int(c) for row, c in zip(rows, freq)}
    tv = 0.0
    for outcome, p in exact.items():
        tv += abs(counts.pop(outcome, 0) / n - float(p))
    tv += sum(counts.values()) / n
    return tv / 2


def sampler_tv(dist, n, seed, cap=1 << 12, workers=1):
    """ TV distance between n samples and the exact full-support law """
    return empirical_tv(sample_many(dist, n, seed, ("tv",), workers), full_support(dist, cap))
