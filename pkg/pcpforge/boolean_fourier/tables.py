""" Boolean-cube tables and their Walsh-Hadamard spectra

Index convention: bit j-1 of a cube index t is 0 <=> x_j = +1, so the
character chi_alpha(x) at index t is (-1)^popcount(alpha & t) and the
antipode of t is t ^ (2^d - 1).
"""
from fractions import Fraction

import numpy as np

from pcpforge.utils.errors import InputError, ModeError, SizeError
from pcpforge.utils.misc import popcount, to_mask, point_to_index

SCHEMA = "booltable.v1"
MODES = ("pm1", "indicator")
DEFAULT_MAX_DIM = 20


#####################################################################################
### tables
#####################################################################################

class BooleanTable(object):
    """ A function on {-1,1}^d stored as its 2^d values.

    Arguments:
        dim: d
        values: length 2^d sequence, +-1 in "pm1" mode, 0/1 in "indicator" mode
        mode: "pm1" or "indicator"
    """
    def __init__(self, dim, values, mode="pm1", max_dim=DEFAULT_MAX_DIM):
        if mode not in MODES:
            raise InputError("unknown table mode {!r}".format(mode))
        if dim < 0:
            raise InputError("dimension must be non-negative")
        if dim > max_dim:
            raise SizeError("table dimension {} exceeds cap {}".format(dim, max_dim))
        values = np.array(values, dtype=np.int64).reshape(-1)
        if len(values) != 1 << dim:
            raise InputError("table of dim {} needs {} values, got {}".format(dim, 1 << dim, len(values)))
        allowed = (-1, 1) if mode == "pm1" else (0, 1)
        if not np.isin(values, allowed).all():
            raise InputError("{} table values must lie in {}".format(mode, allowed))
        values.setflags(write=False)
        self.dim = int(dim)
        self.mode = mode
        self.values = values

    @property
    def size(self):
        return 1 << self.dim

    def __call__(self, point):
        """ value at a point of {-1,1}^d (sequence of +-1) or at a cube index """
        if isinstance(point, (int, np.integer)):
            return int(self.values[point])
        return int(self.values[point_to_index(point)])

    def is_folded(self):
        """ f(-x) = -f(x) everywhere """
        if self.mode != "pm1":
            return False
        full = self.size - 1
        t = np.arange(self.size)
        return bool(np.array_equal(self.values[t ^ full], -self.values))

    def mean(self):
        return Fraction(int(self.values.sum()), self.size)

    def to_indicator(self):
        """ pm1 -> indicator of the +1 points """
        if self.mode == "indicator":
            return self
        return BooleanTable(self.dim, (self.values + 1) // 2, mode="indicator")

    def to_pm1(self):
        """ indicator -> +1 on the support, -1 off it """
        if self.mode == "pm1":
            return self
        return BooleanTable(self.dim, 2 * self.values - 1, mode="pm1")

    def to_dict(self):
        return {"dim": self.dim, "mode": self.mode, "values": [int(x) for x in self.values]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["dim"], data["values"], mode=data.get("mode", "pm1"))
        except (KeyError, TypeError) as e:
            raise InputError("malformed {} document: {}".format(SCHEMA, e))

    def __eq__(self, other):
        return (isinstance(other, BooleanTable) and self.dim == other.dim
                and self.mode == other.mode and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.dim, self.mode, self.values.tobytes()))

    def __repr__(self):
        return "BooleanTable(dim={}, mode={})".format(self.dim, self.mode)


class FourierSpectrum(object):
    """ Exact Walsh-Hadamard coefficients of a table.

    Coefficients are kept as integer numerators over the common denominator 2^d,
    coeff(alpha) = numerators[alpha] / 2^d.
    """
    def __init__(self, dim, numerators, mode="pm1"):
        self.dim = int(dim)
        self.mode = mode
        numerators = np.array(numerators, dtype=np.int64).reshape(-1)
        numerators.setflags(write=False)
        self.numerators = numerators

    @property
    def denominator(self):
        return 1 << self.dim

    def coeff(self, alpha):
        return Fraction(int(self.numerators[to_mask(alpha)]), self.denominator)

    def coefficients(self):
        return [Fraction(int(n), self.denominator) for n in self.numerators]

    def squared(self, alpha):
        """ coeff(alpha)^2 """
        return Fraction(int(self.numerators[to_mask(alpha)]) ** 2, self.denominator ** 2)

    def squared_weights(self):
        """ integer numerators of coeff^2 over 4^d """
        return self.numerators.astype(np.int64) ** 2

    def support(self):
        """ masks with nonzero coefficient, ascending """
        return [int(a) for a in np.nonzero(self.numerators)[0]]

    def __eq__(self, other):
        return (isinstance(other, FourierSpectrum) and self.dim == other.dim
                and np.array_equal(self.numerators, other.numerators))

    def __repr__(self):
        return "FourierSpectrum(dim={}, support={})".format(self.dim, len(self.support()))


#####################################################################################
### transforms
#####################################################################################

def fwht(values):
    """ unnormalized Walsh-Hadamard butterfly, out[a] = sum_t values[t] (-1)^|a & t|

    Works on any numeric dtype (int64, object for exact big integers).
    """
    a = np.array(values).reshape(-1)
    n = len(a)
    if n & (n - 1):
        raise InputError("transform length must be a power of two, got {}".format(n))
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        a = np.stack([a[:, 0, :] + a[:, 1, :], a[:, 0, :] - a[:, 1, :]], axis=1)
        h *= 2
    return a.reshape(n)


def wht(table, max_dim=DEFAULT_MAX_DIM):
    """ exact spectrum, coeff(alpha) = E_x[f(x) chi_alpha(x)] """
    if table.dim > max_dim:
        raise SizeError("table dimension {} exceeds cap {}".format(table.dim, max_dim))
    return FourierSpectrum(table.dim, fwht(table.values.astype(np.int64)), mode=table.mode)


def inverse_wht(spectrum):
    """ table with the given spectrum, exact """
    raw = fwht(spectrum.numerators.astype(np.int64))
    values = raw >> spectrum.dim
    if not np.array_equal(values << spectrum.dim, raw):
        raise InputError("spectrum does not come from an integer table")
    return BooleanTable(spectrum.dim, values, mode=spectrum.mode)


def naive_wht(table):
    """ O(4^d) direct evaluation of every coefficient """
    n = table.size
    out = []
    for alpha in range(n):
        acc = 0
        for t in range(n):
            acc += int(table.values[t]) * (-1) ** popcount(alpha & t)
        out.append(Fraction(acc, n))
    return out


def parseval(spectrum):
    """ sum of squared coefficients = E[f^2] """
    total = sum(int(n) ** 2 for n in spectrum.numerators)
    return Fraction(total, spectrum.denominator ** 2)


#####################################################################################
### characters, folding, long codes
#####################################################################################

def character(mask, point):
    """ chi_mask(point) = product of the selected coordinates of a +-1 point """
    mask = to_mask(mask)
    if mask >> len(point):
        raise InputError("mask exceeds the point dimension {}".format(len(point)))
    out = 1
    for j, x in enumerate(point):
        if (mask >> j) & 1:
            out *= x
    return out


def character_table(mask, dim):
    """ chi_mask as a pm1 table """
    t = np.arange(1 << dim, dtype=np.int64)
    parity = np.zeros(len(t), dtype=np.int64)
    for b in range(dim):
        if (mask >> b) & 1:
            parity ^= (t >> b) & 1
    return BooleanTable(dim, 1 - 2 * parity)


def fold(table):
    """ odd extension from the representatives x_1 = +1 (index bit 0 clear) """
    if table.mode != "pm1":
        raise ModeError("folding needs a pm1 table, got {}".format(table.mode))
    if table.dim == 0:
        raise ModeError("a 0-dimensional table cannot be folded")
    values = table.values.copy()
    full = table.size - 1
    reps = np.arange(0, table.size, 2)
    values[reps ^ full] = -values[reps]
    return BooleanTable(table.dim, values)


def long_code(j, dim):
    """ dictator x -> x_j (1-based j) """
    if not 1 <= j <= dim:
        raise InputError("label {} outside [1, {}]".format(j, dim))
    t = np.arange(1 << dim, dtype=np.int64)
    return BooleanTable(dim, 1 - 2 * ((t >> (j - 1)) & 1))


def constant_table(dim, value=1, mode="pm1"):
    return BooleanTable(dim, np.full(1 << dim, value, dtype=np.int64), mode=mode)


def random_table(dim, rng, mode="pm1", folded=False, density=None):
    """ uniform random table (or with P[value = 1] = density) """
    if density is None:
        bits = rng.integers(0, 2, size=1 << dim)
    else:
        bits = (rng.random(1 << dim) < density).astype(np.int64)
    if mode == "indicator":
        table = BooleanTable(dim, bits, mode="indicator")
    else:
        table = BooleanTable(dim, 2 * bits - 1)
    if folded:
        table = fold(table)
    return table
