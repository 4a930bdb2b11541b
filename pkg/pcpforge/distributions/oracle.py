""" full-support enumeration of block-factored distributions (test oracle) """
import math
from fractions import Fraction
from collections import defaultdict

import numpy as np

from pcpforge.utils.errors import InputError, SizeError
from pcpforge.utils.misc import submasks, mask_bits
from pcpforge.boolean_fourier.tables import fwht
from pcpforge.distributions.blocks import FLIP, COPY

ORACLE_CAP = 1 << 12


def _pair_outcomes(mask, rule):
    """ (first, second, prob) over the restriction of a pair to `mask` """
    subs = submasks(mask)
    n = len(subs)
    if rule == FLIP:
        return [(s, s ^ mask, Fraction(1, n)) for s in subs]
    if rule == COPY:
        return [(s, s, Fraction(1, n)) for s in subs]
    return [(s, s2, Fraction(1, n * n)) for s in subs for s2 in subs]


def block_outcomes(block):
    """ exact law of (x, x', y, y') restricted to one block

    For the e3sat kind the x slot holds the bit of x_i and the x' slot is 0.
    """
    out = defaultdict(Fraction)
    for br in block.branches:
        if br.x_value is None:
            xs = _pair_outcomes(block.x_mask, br.x_rule)
        else:
            xs = [(block.x_mask if br.x_value == -1 else 0, 0, Fraction(1))]
        ys = _pair_outcomes(block.y_mask, br.y_rule)
        for x1, x2, px in xs:
            for y1, y2, py in ys:
                out[(x1, x2, y1, y2)] += br.weight * px * py
    return dict(out)


def support_bound(dist):
    n = 1
    for block in dist.blocks:
        n *= len(block_outcomes(block))
    return n


def full_support(dist, cap=ORACLE_CAP):
    """ exact joint law over complete query tuples

    Returns:
        dict {(x, x', y, y') or (x, y, y'): Fraction} of cube indices
    """
    bound = support_bound(dist)
    if bound > cap:
        raise SizeError("support of {} outcomes exceeds oracle cap {}".format(bound, cap))
    joint = {(0, 0, 0, 0): Fraction(1)}
    for block in dist.blocks:
        outcomes = block_outcomes(block)
        new = defaultdict(Fraction)
        for key, p in joint.items():
            for part, q in outcomes.items():
                new[tuple(a | b for a, b in zip(key, part))] += p * q
        joint = new
    if dist.kind == "e3sat":
        return {(x, y, y2): p for (x, _, y, y2), p in joint.items()}
    return dict(joint)


def joint_index(dist, outcome):
    """ concatenate the components of an outcome into one cube index """
    if dist.kind == "e3sat":
        x, y, y2 = outcome
        return x | (y << dist.x_dim) | (y2 << (dist.x_dim + dist.y_dim))
    x, x2, y, y2 = outcome
    m, n = dist.x_dim, dist.y_dim
    return x | (x2 << m) | (y << 2 * m) | (y2 << (2 * m + n))


def support_character_table(dist, cap=ORACLE_CAP):
    """ every character expectation of the joint at once, by one exact transform

    Returns:
        (numerators, denominator): object array indexed by joint_index of the
        mask tuple, E[chi] = numerators[mask] / denominator
    """
    joint = full_support(dist, cap)
    denominator = 1
    for p in joint.values():
        denominator = math.lcm(denominator, p.denominator)
    pmf = np.zeros(1 << dist.query_bits, dtype=object)
    for outcome, p in joint.items():
        pmf[joint_index(dist, outcome)] += p.numerator * (denominator // p.denominator)
    return fwht(pmf), denominator


def coordinate_marginals(dist):
    """ Pr[coordinate = +1] for every coordinate of every component, blockwise

    Returns:
        dict component -> list of Fractions (length = component dimension)
    """
    dims = {"x": dist.x_dim, "x'": dist.x_dim, "y": dist.y_dim, "y'": dist.y_dim}
    slots = {"x": 0, "x'": 1, "y": 2, "y'": 3}
    out = {}
    for comp in dist.components:
        probs = [None] * dims[comp]
        for block in dist.blocks:
            outcomes = block_outcomes(block)
            mask = block.x_mask if comp.startswith("x") else block.y_mask
            for b in mask_bits(mask):
                probs[b] = sum((p for key, p in outcomes.items() if not (key[slots[comp]] >> b) & 1),
                               Fraction(0))
        out[comp] = probs
    return out


def equal_pattern_probability(dist, j, j2):
    """ Pr[(x_j, x'_j, y_j2, y'_j2) is all +1 or all -1], 0-based coordinates

    Only meaningful for coordinates in the same block (hypergraph / fourss kinds).
    """
    block = next((b for b in dist.blocks if j >= 0 and (b.x_mask >> j) & 1), None)
    if block is None:
        raise InputError("coordinate {} lies in no block".format(j))
    if not (block.y_mask >> j2) & 1:
        raise InputError("coordinates {} and {} lie in different blocks".format(j, j2))
    total = Fraction(0)
    for (x1, x2, y1, y2), p in block_outcomes(block).items():
        bits = {(x1 >> j) & 1, (x2 >> j) & 1, (y1 >> j2) & 1, (y2 >> j2) & 1}
        if len(bits) == 1:
            total += p
    return total
