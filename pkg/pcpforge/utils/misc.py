import json
import hashlib
import itertools
from fractions import Fraction
from decimal import Decimal, Context

import numpy as np

from pcpforge.utils.errors import InputError

# 256-bit working precision for the few irrational quantities
DECIMAL_CONTEXT = Context(prec=78)
SLACK = Decimal("1e-12")


#####################################################################################
### rationals
#####################################################################################

def parse_fraction(text):
    """ parse "p/q" (or an integer string) into an exact Fraction, q > 0 """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    parts = str(text).strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) != 2:
            raise ValueError(text)
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError("not a rational p/q: {!r}".format(text))
    if den <= 0:
        raise InputError("denominator must be positive: {!r}".format(text))
    return Fraction(num, den)


def fraction_str(value):
    """ exact rationals serialize as "p/q", 1 -> "1/1" """
    value = Fraction(value)
    return "{}/{}".format(value.numerator, value.denominator)


def to_decimal(value):
    if isinstance(value, Decimal):
        return value
    value = Fraction(value)
    return DECIMAL_CONTEXT.divide(Decimal(value.numerator), Decimal(value.denominator))


def dec_sqrt(value):
    return DECIMAL_CONTEXT.sqrt(to_decimal(value))


def dec_pow(base, exponent):
    return DECIMAL_CONTEXT.power(to_decimal(base), to_decimal(exponent))


def dec_str(value):
    """ fixed 30 significant digits for reports """
    return "{:.30g}".format(value)


def mean_fraction(values):
    values = list(values)
    return sum(values, Fraction(0)) / len(values)


#####################################################################################
### bit masks (bit j-1 <-> coordinate j)
#####################################################################################

def popcount(x):
    return bin(x).count("1")


def popcount_array(arr, bits):
    """ element-wise popcount of a non-negative integer array """
    arr = np.asarray(arr, dtype=np.int64)
    out = np.zeros(arr.shape, dtype=np.int64)
    for b in range(bits):
        out += (arr >> b) & 1
    return out


def to_mask(subset):
    """ int masks pass through, iterables of 1-based coordinates are packed """
    if isinstance(subset, (int, np.integer)):
        return int(subset)
    mask = 0
    for j in subset:
        if j < 1:
            raise InputError("coordinates are 1-based, got {}".format(j))
        mask |= 1 << (j - 1)
    return mask


def mask_to_set(mask):
    """ 1-based coordinates of a mask """
    return tuple(j + 1 for j in range(mask.bit_length()) if (mask >> j) & 1)


def mask_bits(mask):
    """ 0-based bit positions of a mask """
    return [j for j in range(mask.bit_length()) if (mask >> j) & 1]


def submasks(mask):
    """ all submasks of `mask`, ascending """
    bits = mask_bits(mask)
    out = []
    for choice in itertools.product((0, 1), repeat=len(bits)):
        sub = 0
        for b, c in zip(bits, choice):
            if c:
                sub |= 1 << b
        out.append(sub)
    return sorted(out)


def spread_bits(value, mask):
    """ deposit the low bits of `value` onto the set bits of `mask` """
    out = 0
    for pos, b in enumerate(mask_bits(mask)):
        if (value >> pos) & 1:
            out |= 1 << b
    return out


def index_to_point(t, dim):
    """ cube index -> point of {-1,1}^dim """
    return tuple(-1 if (t >> j) & 1 else 1 for j in range(dim))


def point_to_index(point):
    t = 0
    for j, x in enumerate(point):
        if x not in (-1, 1):
            raise InputError("point coordinates must be +-1, got {}".format(x))
        if x == -1:
            t |= 1 << j
    return t


#####################################################################################
### digests
#####################################################################################

def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj, length=16):
    """ short sha256 of the canonical json form """
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()[:length]
