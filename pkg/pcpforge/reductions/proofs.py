""" PCP proofs: one Boolean table per Long Code copy """
from fractions import Fraction

import numpy as np

from pcpforge.utils.errors import InputError, PreconditionError
from pcpforge.utils.misc import digest
from pcpforge.utils.rng import make_rng
from pcpforge.boolean_fourier import BooleanTable, long_code, constant_table, random_table

SCHEMA = "proofs.v1"


class ProofAssignment(object):
    """ Long Code tables A^u (dim k, left) and A^v (dim m, right).

    Arguments:
        left: per-u pm1 tables, or empty when the reduction only reads V
        right: per-v pm1 tables
        folded: every table satisfies A(-x) = -A(x)
    """
    def __init__(self, left, right, folded=False):
        self.left = tuple(left)
        self.right = tuple(right)
        self.folded = bool(folded)
        for t in self.left + self.right:
            if not isinstance(t, BooleanTable) or t.mode != "pm1":
                raise InputError("proof tables must be pm1 BooleanTables")
        if self.folded and not all(t.is_folded() for t in self.left + self.right):
            raise InputError("proof marked folded but a table is not folded")

    def check(self, lc, need_left=False):
        if len(self.right) != lc.v_count:
            raise InputError("proof has {} right tables, instance has {} vertices".format(
                len(self.right), lc.v_count))
        if any(t.dim != lc.m for t in self.right):
            raise InputError("right tables must have dimension m={}".format(lc.m))
        if need_left:
            if len(self.left) != lc.u_count:
                raise PreconditionError("left Long Codes are required for this verifier")
            if any(t.dim != lc.k for t in self.left):
                raise InputError("left tables must have dimension k={}".format(lc.k))
        return self

    def indicators(self, side="right"):
        """ 0/1 int arrays of the +1 points """
        tables = self.right if side == "right" else self.left
        return [(t.values + 1) // 2 for t in tables]

    def to_dict(self):
        tables = {}
        for u, t in enumerate(self.left):
            tables["u{}".format(u + 1)] = t.to_dict()
        for v, t in enumerate(self.right):
            tables["v{}".format(v + 1)] = t.to_dict()
        return {"schema": SCHEMA, "folded": self.folded, "tables": tables}

    @classmethod
    def from_dict(cls, data):
        try:
            tables = data["tables"]
            left = _collect(tables, "u")
            right = _collect(tables, "v")
            return cls(left, right, folded=data.get("folded", False))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError("malformed {} document: {}".format(SCHEMA, e))

    def digest(self):
        return digest(self.to_dict())

    def __eq__(self, other):
        return (isinstance(other, ProofAssignment) and self.folded == other.folded
                and self.left == other.left and self.right == other.right)

    def __repr__(self):
        return "ProofAssignment(left={}, right={}, folded={})".format(
            len(self.left), len(self.right), self.folded)


def _collect(tables, prefix):
    ids = sorted(int(key[1:]) for key in tables if key.startswith(prefix))
    if ids != list(range(1, len(ids) + 1)):
        raise InputError("{} tables must be numbered 1..n".format(prefix))
    return [BooleanTable.from_dict(tables["{}{}".format(prefix, i)]) for i in ids]


#####################################################################################
### constructors
#####################################################################################

def long_code_proofs(lc, labeling, left=True):
    """ dictators of a labeling, A^v(x) = x_{l_v} (always folded) """
    labeling.check(lc)
    lefts = [long_code(l + 1, lc.k) for l in labeling.left] if left else []
    return ProofAssignment(lefts, [long_code(l + 1, lc.m) for l in labeling.right], folded=True)


def random_proofs(lc, seed, folded=False, density=None, left=True):
    """ independent random tables, one Philox stream per vertex """
    lefts = []
    if left:
        lefts = [random_table(lc.k, make_rng(seed, "proof", "u", u), folded=folded, density=density)
                 for u in range(lc.u_count)]
    rights = [random_table(lc.m, make_rng(seed, "proof", "v", v), folded=folded, density=density)
              for v in range(lc.v_count)]
    return ProofAssignment(lefts, rights, folded=folded)


def constant_proofs(lc, value=1, left=True):
    lefts = [constant_table(lc.k, value) for _ in range(lc.u_count)] if left else []
    return ProofAssignment(lefts, [constant_table(lc.m, value) for _ in range(lc.v_count)])


def ones_fraction(proofs):
    """ exact fraction of +1 entries over the right tables, v and x uniform """
    if not proofs.right:
        raise InputError("proof has no right tables")
    total = Fraction(0)
    for t in proofs.right:
        total += Fraction(int(np.count_nonzero(t.values == 1)), t.size)
    return total / len(proofs.right)
