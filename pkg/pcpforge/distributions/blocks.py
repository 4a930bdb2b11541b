""" block-factored joint query distributions of the three verifiers

A distribution is an independent product over i in [k] of small blocks. Block i
owns the coordinates pi_vu^-1(i) of the first Long Code copy (x, x') and
pi_wu^-1(i) of the second (y, y'), and carries a mixture of branches. A branch
says how the second query of each pair is derived from the first on the block:

    flip          x' = -x on the block
    copy          x' = x on the block
    independent   x' drawn uniformly, independently of x

The first query of every pair is uniform on the block. For the e3sat kind the
x-side is the single left query x in {-1,1}^k and a branch fixes x_i instead.
"""
import itertools
from fractions import Fraction
from functools import lru_cache
from collections import namedtuple

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import popcount, to_mask, parse_fraction

FLIP, COPY, INDEPENDENT = "flip", "copy", "independent"
KINDS = ("hypergraph", "e3sat", "fourss")

Branch = namedtuple("Branch", ["weight", "x_rule", "y_rule", "x_value"])
Block = namedtuple("Block", ["index", "x_mask", "y_mask", "branches"])
Configuration = namedtuple("Configuration", [
    "weight", "x_flip", "x_resample", "y_flip", "y_resample", "x_negative"])


class BlockFactoredDistribution(object):
    """ Joint distribution of one verifier test, as a product of per-block mixtures.

    Arguments:
        kind: "hypergraph", "e3sat" or "fourss"
        k: number of blocks
        x_dim: dimension of the first copy (m, or k for e3sat)
        y_dim: dimension of the second copy (m)
        blocks: tuple of Block
        eps: exact rational noise (None for hypergraph)
    """
    def __init__(self, kind, k, x_dim, y_dim, blocks, eps=None):
        self.kind = kind
        self.k = k
        self.x_dim = x_dim
        self.y_dim = y_dim
        self.blocks = tuple(blocks)
        self.eps = eps
        self._validate()

    def _validate(self):
        x_cover, y_cover = 0, 0
        for block in self.blocks:
            if sum(br.weight for br in block.branches) != 1:
                raise InputError("branch weights of block {} do not sum to 1".format(block.index))
            if x_cover & block.x_mask or y_cover & block.y_mask:
                raise InputError("blocks overlap at block {}".format(block.index))
            x_cover |= block.x_mask
            y_cover |= block.y_mask
        if x_cover != (1 << self.x_dim) - 1 or y_cover != (1 << self.y_dim) - 1:
            raise InputError("blocks do not partition the coordinates")

    @property
    def components(self):
        if self.kind == "e3sat":
            return ("x", "y", "y'")
        return ("x", "x'", "y", "y'")

    @property
    def query_bits(self):
        """ total bits of one query tuple """
        if self.kind == "e3sat":
            return self.x_dim + 2 * self.y_dim
        return 2 * self.x_dim + 2 * self.y_dim

    def configurations(self):
        """ every per-block branch choice with its probability

        Conditioned on a configuration, (x, x') and (y, y') are independent and
        each pair is described by its flip / resample coordinate masks.
        """
        for combo in itertools.product(*[b.branches for b in self.blocks]):
            weight = Fraction(1)
            x_flip = x_res = y_flip = y_res = x_neg = 0
            for block, br in zip(self.blocks, combo):
                weight *= br.weight
                if br.x_rule == FLIP:
                    x_flip |= block.x_mask
                elif br.x_rule == INDEPENDENT:
                    x_res |= block.x_mask
                if br.y_rule == FLIP:
                    y_flip |= block.y_mask
                elif br.y_rule == INDEPENDENT:
                    y_res |= block.y_mask
                if br.x_value == -1:
                    x_neg |= block.x_mask
            yield Configuration(weight, x_flip, x_res, y_flip, y_res, x_neg)

    def n_configurations(self):
        n = 1
        for block in self.blocks:
            n *= len(block.branches)
        return n

    def __repr__(self):
        return "BlockFactoredDistribution(kind={}, k={}, x_dim={}, y_dim={}, eps={})".format(
            self.kind, self.k, self.x_dim, self.y_dim, self.eps)


#####################################################################################
### constructors
#####################################################################################

def _check_projection(pi, k, name):
    pi = tuple(int(p) for p in pi)
    if len(pi) == 0:
        raise InputError("{} is empty".format(name))
    if any(p < 0 or p >= k for p in pi):
        raise InputError("{} has values outside the codomain [k], k={}".format(name, k))
    return pi


def _preimage_masks(pi, k):
    masks = [0] * k
    for j, i in enumerate(pi):
        masks[i] |= 1 << j
    return masks


def _check_eps(eps):
    eps = parse_fraction(eps)
    if not 0 < eps < 1:
        raise InputError("eps must lie in (0, 1), got {}".format(eps))
    return eps


def _infer_k(*pis):
    return max(max(pi) for pi in pis) + 1


def hypergraph_joint(pi_vu, pi_wu, k=None):
    """ per block: w.p. 1/2 x' = -x and (y, y') independent, w.p. 1/2 the symmetric branch """
    k = _infer_k(pi_vu, pi_wu) if k is None else k
    pi_vu = _check_projection(pi_vu, k, "pi_vu")
    pi_wu = _check_projection(pi_wu, k, "pi_wu")
    half = Fraction(1, 2)
    branches = (Branch(half, FLIP, INDEPENDENT, None), Branch(half, INDEPENDENT, FLIP, None))
    blocks = [Block(i, xm, ym, branches)
              for i, (xm, ym) in enumerate(zip(_preimage_masks(pi_vu, k), _preimage_masks(pi_wu, k)))]
    return BlockFactoredDistribution("hypergraph", k, len(pi_vu), len(pi_wu), blocks)


def e3sat_joint(pi_vu, eps, k=None):
    """ per block: x_i uniform; x_i = 1 -> y' = -y; x_i = -1 -> y' = y w.p. 1-eps, else independent """
    eps = _check_eps(eps)
    k = _infer_k(pi_vu) if k is None else k
    pi_vu = _check_projection(pi_vu, k, "pi_vu")
    half = Fraction(1, 2)
    branches = (
        Branch(half, None, FLIP, 1),
        Branch((1 - eps) / 2, None, COPY, -1),
        Branch(eps / 2, None, INDEPENDENT, -1),
    )
    blocks = [Block(i, 1 << i, ym, branches) for i, ym in enumerate(_preimage_masks(pi_vu, k))]
    return BlockFactoredDistribution("e3sat", k, k, len(pi_vu), blocks, eps=eps)


def fourss_joint(pi_vu, pi_wu, eps, k=None):
    """ per block: w.p. 1/2 x' = -x and y' = y (1-eps) or independent (eps), else symmetric """
    eps = _check_eps(eps)
    k = _infer_k(pi_vu, pi_wu) if k is None else k
    pi_vu = _check_projection(pi_vu, k, "pi_vu")
    pi_wu = _check_projection(pi_wu, k, "pi_wu")
    branches = (
        Branch((1 - eps) / 2, FLIP, COPY, None),
        Branch(eps / 2, FLIP, INDEPENDENT, None),
        Branch((1 - eps) / 2, COPY, FLIP, None),
        Branch(eps / 2, INDEPENDENT, FLIP, None),
    )
    blocks = [Block(i, xm, ym, branches)
              for i, (xm, ym) in enumerate(zip(_preimage_masks(pi_vu, k), _preimage_masks(pi_wu, k)))]
    return BlockFactoredDistribution("fourss", k, len(pi_vu), len(pi_wu), blocks, eps=eps)


JOINTS_MAP = {
    "hypergraph": hypergraph_joint,
    "e3sat": e3sat_joint,
    "fourss": fourss_joint,
}


def pair_rule_marginal(kind, eps=None):
    """ per-block law of the rule relating x' to x, with the other pair marginalized """
    half = Fraction(1, 2)
    if kind == "hypergraph":
        return ((half, FLIP), (half, INDEPENDENT))
    if kind in ("e3sat", "fourss"):
        eps = _check_eps(eps)
        return ((half, FLIP), ((1 - eps) / 2, COPY), (eps / 2, INDEPENDENT))
    raise InputError("unknown distribution kind {!r}".format(kind))


#####################################################################################
### character expectations
#####################################################################################

def _pair_factor(rule, a, a2):
    """ E[chi_a(z) chi_a2(z')] on one block under a pair rule """
    if rule == FLIP:
        return (-1) ** popcount(a2) if a == a2 else 0
    if rule == COPY:
        return 1 if a == a2 else 0
    return 1 if a == 0 and a2 == 0 else 0


@lru_cache(maxsize=1 << 16)
def block_value(block, xa, xa2, ya, ya2):
    """ exact expectation of the restricted character product on one block """
    total = Fraction(0)
    for br in block.branches:
        if br.x_value is None:
            fx = _pair_factor(br.x_rule, xa, xa2)
        else:
            fx = br.x_value if xa else 1
        if fx == 0:
            continue
        fy = _pair_factor(br.y_rule, ya, ya2)
        total += br.weight * fx * fy
    return total


def block_values(dist, xa, xa2, ya, ya2):
    """ per-block factors of a character product """
    return [block_value(b, xa & b.x_mask, xa2 & b.x_mask, ya & b.y_mask, ya2 & b.y_mask)
            for b in dist.blocks]


def char_expectation(dist, xa, xa2, ya, ya2):
    """ product over blocks of the block factors (stops at the first zero) """
    out = Fraction(1)
    for b in dist.blocks:
        val = block_value(b, xa & b.x_mask, xa2 & b.x_mask, ya & b.y_mask, ya2 & b.y_mask)
        if val == 0:
            return Fraction(0)
        out *= val
    return out


def _check_masks(dist, masks_x, masks_y):
    for mask in masks_x:
        if mask >> dist.x_dim:
            raise InputError("mask {} outside the first copy".format(mask))
    for mask in masks_y:
        if mask >> dist.y_dim:
            raise InputError("mask {} outside the second copy".format(mask))


def _require_kind(dist, kind):
    if dist.kind != kind:
        raise InputError("expected a {} distribution, got {}".format(kind, dist.kind))


def char_expectation_hypergraph(dist, alpha, alpha2, beta, beta2):
    """ E[chi_alpha(x) chi_alpha2(x') chi_beta(y) chi_beta2(y')] """
    _require_kind(dist, "hypergraph")
    masks = [to_mask(a) for a in (alpha, alpha2, beta, beta2)]
    _check_masks(dist, masks[:2], masks[2:])
    return char_expectation(dist, *masks)


def char_expectation_e3sat(dist, alpha, beta, beta2):
    """ E[chi_alpha(x) chi_beta(y) chi_beta2(y')], alpha over [k] """
    _require_kind(dist, "e3sat")
    masks = [to_mask(a) for a in (alpha, beta, beta2)]
    _check_masks(dist, masks[:1], masks[1:])
    return char_expectation(dist, masks[0], 0, masks[1], masks[2])


def char_expectation_4ss(dist, alpha, alpha2, beta, beta2):
    """ E[chi_alpha(x) chi_alpha2(x') chi_beta(y) chi_beta2(y')] under the 4SS test """
    _require_kind(dist, "fourss")
    masks = [to_mask(a) for a in (alpha, alpha2, beta, beta2)]
    _check_masks(dist, masks[:2], masks[2:])
    return char_expectation(dist, *masks)
