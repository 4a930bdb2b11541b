from fractions import Fraction
from collections import defaultdict

import numpy as np

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import digest

SCHEMA = "labelcover.v1"
LABELING_SCHEMA = "labeling.v1"


#####################################################################################
### instance
#####################################################################################

class LabelCoverInstance(object):
    """ Bipartite projection game G(U, V, E) with label sets [k] (left) and [m] (right).

    Vertices and labels are 0-based in memory, 1-based in serialized form.
    Each edge (u, v) carries a total map pi: [m] -> [k] stored as a tuple of length m.
    Instances are immutable after construction.

    Arguments:
        u_count, v_count: sizes of U and V
        edges: list of (u, v) pairs (multi-edges allowed)
        k, m: left / right label counts, k <= m
        projections: one length-m sequence per edge with values in range(k)
    """
    def __init__(self, u_count, v_count, edges, k, m, projections):
        if u_count < 1 or v_count < 1 or k < 1 or m < 1:
            raise InputError("u_count, v_count, k, m must be positive")
        if k > m:
            raise InputError("need k <= m, got k={} m={}".format(k, m))
        if len(edges) != len(projections):
            raise InputError("one projection per edge required")
        edges = tuple((int(u), int(v)) for u, v in edges)
        projections = tuple(tuple(int(p) for p in pi) for pi in projections)
        for (u, v), pi in zip(edges, projections):
            if not (0 <= u < u_count and 0 <= v < v_count):
                raise InputError("edge ({}, {}) out of range".format(u, v))
            if len(pi) != m:
                raise InputError("projection must be defined on all of [m]")
            if any(p < 0 or p >= k for p in pi):
                raise InputError("projection values must lie in [k]")
        if set(u for u, _ in edges) != set(range(u_count)):
            raise InputError("every u must appear in at least one edge")
        if set(v for _, v in edges) != set(range(v_count)):
            raise InputError("every v must appear in at least one edge")

        self.u_count = int(u_count)
        self.v_count = int(v_count)
        self.k = int(k)
        self.m = int(m)
        self.edges = edges
        self.projections = projections

        u_edges, v_edges = defaultdict(list), defaultdict(list)
        for e, (u, v) in enumerate(edges):
            u_edges[u].append(e)
            v_edges[v].append(e)
        self._u_edges = tuple(tuple(u_edges[u]) for u in range(self.u_count))
        self._v_edges = tuple(tuple(v_edges[v]) for v in range(self.v_count))

    @property
    def n_edges(self):
        return len(self.edges)

    def edges_of_u(self, u):
        """ edge indices incident to u (its neighbors, with multiplicity) """
        return self._u_edges[u]

    def edges_of_v(self, v):
        return self._v_edges[v]

    def degree_u(self, u):
        return len(self._u_edges[u])

    def onto_flags(self):
        """ per-edge flag: projection is onto [k] """
        return tuple(len(set(pi)) == self.k for pi in self.projections)

    def is_onto(self):
        return all(self.onto_flags())

    def triples(self):
        """ (weight, u, e1, e2): u uniform, two neighbors independently uniform """
        for u in range(self.u_count):
            es = self._u_edges[u]
            w = Fraction(1, self.u_count * len(es) ** 2)
            for e1 in es:
                for e2 in es:
                    yield w, u, e1, e2

    def edge_weights(self):
        """ weight of each edge when u is uniform and then one neighbor is uniform """
        return [Fraction(1, self.u_count * self.degree_u(u)) for u, _ in self.edges]

    def to_dict(self):
        return {
            "k": self.k,
            "m": self.m,
            "u_count": self.u_count,
            "v_count": self.v_count,
            "edges": [{"u": u + 1, "v": v + 1, "pi": [p + 1 for p in pi]}
                      for (u, v), pi in zip(self.edges, self.projections)],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            edges = [(e["u"] - 1, e["v"] - 1) for e in data["edges"]]
            projections = [[p - 1 for p in e["pi"]] for e in data["edges"]]
            return cls(data["u_count"], data["v_count"], edges, data["k"], data["m"], projections)
        except (KeyError, TypeError) as e:
            raise InputError("malformed {} document: {}".format(SCHEMA, e))

    def digest(self):
        return digest(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, LabelCoverInstance) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        return "LabelCoverInstance(|U|={}, |V|={}, |E|={}, k={}, m={})".format(
            self.u_count, self.v_count, self.n_edges, self.k, self.m)


class Labeling(object):
    """ left labels in [k] for U, right labels in [m] for V (0-based) """
    def __init__(self, left, right):
        self.left = tuple(int(l) for l in left)
        self.right = tuple(int(l) for l in right)

    def check(self, inst):
        if len(self.left) != inst.u_count or len(self.right) != inst.v_count:
            raise InputError("labeling dimensions do not match the instance")
        if any(l < 0 or l >= inst.k for l in self.left):
            raise InputError("left label out of range")
        if any(l < 0 or l >= inst.m for l in self.right):
            raise InputError("right label out of range")
        return self

    def to_dict(self):
        return {"left": [l + 1 for l in self.left], "right": [l + 1 for l in self.right]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls([l - 1 for l in data["left"]], [l - 1 for l in data["right"]])
        except (KeyError, TypeError) as e:
            raise InputError("malformed {} document: {}".format(LABELING_SCHEMA, e))

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.left == other.left and self.right == other.right

    def __hash__(self):
        return hash((self.left, self.right))

    def __repr__(self):
        return "Labeling(left={}, right={})".format(self.left, self.right)


#####################################################################################
### evaluation
#####################################################################################

def satisfied_edges(inst, labeling):
    """ boolean array, edge e satisfied iff pi_e(l_v) = l_u """
    labeling.check(inst)
    return np.array([pi[labeling.right[v]] == labeling.left[u]
                     for (u, v), pi in zip(inst.edges, inst.projections)], dtype=bool)


def value(inst, labeling):
    """ exact fraction of satisfied edges """
    return Fraction(int(satisfied_edges(inst, labeling).sum()), inst.n_edges)


def is_biregular(inst):
    """ all u share one degree and all v share one degree """
    du = set(len(inst.edges_of_u(u)) for u in range(inst.u_count))
    dv = set(len(inst.edges_of_v(v)) for v in range(inst.v_count))
    return len(du) == 1 and len(dv) == 1


def expected_random_right_value(inst, labeling):
    """ E[value] when left labels are kept and every right label is redrawn uniformly
    """
    labeling.check(inst)
    total = Fraction(0)
    for (u, v), pi in zip(inst.edges, inst.projections):
        total += Fraction(sum(1 for p in pi if p == labeling.left[u]), inst.m)
    return total / inst.n_edges
