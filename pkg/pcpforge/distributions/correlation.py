from fractions import Fraction

import numpy as np

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import mask_bits, popcount


def _as_values(f):
    return np.asarray(getattr(f, "values", f), dtype=np.int64).reshape(-1)


def pair_correlation(f, g, flip=0, resample=0):
    """ exact E_x[f(x) g(x')] where x is uniform and x' equals x except that
    coordinates in `flip` are negated and coordinates in `resample` are redrawn

    Arguments:
        f, g: tables (or integer arrays) over the same cube {-1,1}^d
        flip, resample: disjoint coordinate masks
    """
    f, g = _as_values(f), _as_values(g)
    n = len(f)
    dim = n.bit_length() - 1
    if len(g) != n or n != 1 << dim:
        raise InputError("tables must share a power-of-two length")
    if flip & resample:
        raise InputError("flip and resample masks overlap")
    # coordinate j (bit j) is axis dim-1-j of the C-ordered (2,)*dim tensor
    shape = (2,) * dim
    G = g.reshape(shape)
    res_axes = tuple(dim - 1 - b for b in mask_bits(resample))
    if res_axes:
        G = G.sum(axis=res_axes, keepdims=True)
    flip_axes = tuple(dim - 1 - b for b in mask_bits(flip))
    if flip_axes:
        G = np.flip(G, axis=flip_axes)
    G = np.broadcast_to(G, shape).reshape(-1)
    return Fraction(int(np.dot(f, G)), n << popcount(resample))
