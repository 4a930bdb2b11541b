""" counter-based random streams

Every random draw in pcpforge comes from a Philox generator whose key is a
sha256 digest of (seed, *labels). A stream is therefore addressed by its
labels (e.g. ("sample", chunk_index)) and never depends on how many streams
were consumed before it or by which worker.
"""
import hashlib
from fractions import Fraction

import numpy as np

CHUNK = 1 << 14     # samples per stream chunk
SEED_MASK = (1 << 64) - 1


def stream_key(seed, *labels):
    text = "|".join([str(int(seed) & SEED_MASK)] + [str(l) for l in labels])
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:16], "little")


def make_rng(seed, *labels):
    """ numpy Generator on the Philox stream keyed by (seed, labels) """
    return np.random.Generator(np.random.Philox(key=stream_key(seed, *labels)))


def chunk_sizes(n, chunk=CHUNK):
    """ split n samples into fixed-size chunks, last one partial """
    sizes = [chunk] * (n // chunk)
    if n % chunk:
        sizes.append(n % chunk)
    return sizes


def random_fraction_weights(rng, size, denominator):
    """ `size` positive integers summing to `denominator`, as Fractions
        (random composition, every atom >= 1/denominator)
    """
    cuts = np.sort(rng.choice(np.arange(1, denominator), size=size - 1, replace=False))
    edges = [0] + [int(c) for c in cuts] + [denominator]
    return [Fraction(edges[i + 1] - edges[i], denominator) for i in range(size)]
