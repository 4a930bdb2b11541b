from fractions import Fraction

import numpy as np

from pcpforge.utils.rng import make_rng, chunk_sizes, stream_key, random_fraction_weights


def test_streams_are_reproducible_and_distinct():
    a = make_rng(3, "sample", 0).integers(0, 1 << 30, size=8)
    b = make_rng(3, "sample", 0).integers(0, 1 << 30, size=8)
    c = make_rng(3, "sample", 1).integers(0, 1 << 30, size=8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_negative_and_large_seeds_map_into_64_bits():
    assert stream_key(-1, "x") == stream_key((1 << 64) - 1, "x")


def test_chunk_sizes():
    assert chunk_sizes(10, chunk=4) == [4, 4, 2]
    assert chunk_sizes(8, chunk=4) == [4, 4]
    assert chunk_sizes(0, chunk=4) == []


def test_random_fraction_weights():
    rng = make_rng(0, "weights")
    for size in range(1, 5):
        w = random_fraction_weights(rng, size, 64)
        assert sum(w) == 1
        assert min(w) >= Fraction(1, 64)
