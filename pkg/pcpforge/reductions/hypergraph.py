""" 4-uniform hypergraph over the Long Codes of V

Vertex (v, t) is point t of the copy H^v = {-1,1}^m and has id v * 2^m + t. A
hyperedge is one draw of (u, v, w, x, x', y, y'): u uniform, v and w independent
uniform neighbors of u (v = w allowed), (x, x', y, y') from hypergraph_joint.
"""
import logging
from fractions import Fraction
from functools import partial
from collections import defaultdict

import numpy as np

from pcpforge.utils.errors import InputError, PreconditionError, check_cap
from pcpforge.utils.misc import parse_fraction
from pcpforge.label_cover import value
from pcpforge.distributions import hypergraph_joint, full_support, pair_correlation
from pcpforge.reductions.common import DEFAULT_CAP_STATES, DEFAULT_SAMPLES
from pcpforge.reductions.common import run_mode, estimate, sample_queries

logger = logging.getLogger(__name__)


def _joint(lc, e1, e2):
    return hypergraph_joint(lc.projections[e1], lc.projections[e2], k=lc.k)


class HypergraphInstance(object):
    """ implicit hypergraph backed by a LabelCoverInstance; edges are enumerated on demand """
    def __init__(self, lc, cap=DEFAULT_CAP_STATES):
        self.lc = lc
        self.cap = cap
        self._edges = None

    @property
    def copy_size(self):
        return 1 << self.lc.m

    @property
    def vertex_count(self):
        return self.lc.v_count * self.copy_size

    def vertex_id(self, v, t):
        return v * self.copy_size + t

    def vertex(self, vid):
        """ (v, cube index) of a vertex id """
        return divmod(int(vid), self.copy_size)

    def enumeration_size(self):
        m = self.lc.m
        return sum(self.lc.degree_u(u) ** 2 for u in range(self.lc.u_count)) << (4 * m)

    def enumerable(self):
        return self.enumeration_size() <= self.cap

    def joint(self, e1, e2):
        return _joint(self.lc, e1, e2)

    def edges(self):
        """ weighted hyperedges {(id_x, id_x', id_y, id_y'): weight}, weights sum to 1 """
        if self._edges is None:
            check_cap(self.enumeration_size(), self.cap, "hyperedge enumeration")
            out = defaultdict(Fraction)
            for w, u, e1, e2 in self.lc.triples():
                v, vw = self.lc.edges[e1][1], self.lc.edges[e2][1]
                for (x, x2, y, y2), p in full_support(self.joint(e1, e2), self.cap).items():
                    key = (self.vertex_id(v, x), self.vertex_id(v, x2),
                           self.vertex_id(vw, y), self.vertex_id(vw, y2))
                    out[key] += w * p
            self._edges = dict(sorted(out.items()))
            logger.info("enumerated {} weighted hyperedges".format(len(self._edges)))
        return self._edges

    def sample_edges(self, n, seed, workers=1):
        """ (n, 4) array of vertex ids of sampled hyperedges """
        _, edge_cols, rows = sample_queries(self.lc, partial(_joint, self.lc), n, seed,
                                            "hyperedges", 2, workers)
        v = np.array([self.lc.edges[e][1] for e in range(self.lc.n_edges)], dtype=np.int64)
        base = np.stack([v[edge_cols[:, 0]], v[edge_cols[:, 0]], v[edge_cols[:, 1]], v[edge_cols[:, 1]]],
                        axis=1) * self.copy_size
        return base + rows

    def to_text(self):
        """ `p hyper <vertices> <edges>` then one line of 4 one-based ids per distinct vertex set """
        sets = sorted(set(tuple(sorted(key)) for key in self.edges()))
        lines = ["p hyper {} {}".format(self.vertex_count, len(sets))]
        lines += [" ".join(str(i + 1) for i in s) for s in sets]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "HypergraphInstance(vertices={}, lc={})".format(self.vertex_count, self.lc)


def build_hypergraph(lc, cap=DEFAULT_CAP_STATES):
    return HypergraphInstance(lc, cap)


#####################################################################################
### subsets and colorings
#####################################################################################

def as_subset(h, subset):
    """ boolean membership array over vertex ids from an array or an iterable of ids """
    arr = np.asarray(subset)
    if arr.dtype == bool:
        if arr.shape != (h.vertex_count,):
            raise InputError("membership array must have length {}".format(h.vertex_count))
        return arr
    out = np.zeros(h.vertex_count, dtype=bool)
    ids = arr.astype(np.int64).reshape(-1)
    if len(ids) and (ids.min() < 0 or ids.max() >= h.vertex_count):
        raise InputError("vertex id out of range")
    out[ids] = True
    return out


def yes_two_coloring(lc, labeling):
    """ class of vertex (v, t) is 1 iff x_{l_v} = -1 at t

    Returns:
        int array of 0/1 colors over vertex ids
    """
    if value(lc, labeling) != 1:
        raise PreconditionError("two-coloring needs a labeling satisfying every edge")
    t = np.arange(1 << lc.m, dtype=np.int64)
    return np.concatenate([(t >> l) & 1 for l in labeling.right])


def independent_set_violations(h, subset, mode="exact", samples=DEFAULT_SAMPLES, seed=0, workers=1):
    """ weight of hyperedges with all four vertices in the subset

    Exact mode conditions on the per-block branch vector, under which (x, x') and
    (y, y') are independent, and needs sum_u deg(u)^2 * 2^k * 2^m <= cap.
    """
    member = as_subset(h, subset)

    def exact():
        return _violations_exact(h, member)

    def sample():
        ids = h.sample_edges(samples, seed, workers)
        return estimate(member[ids].all(axis=1))
    return run_mode(mode, exact, sample)


def _violations_exact(h, member):
    lc = h.lc
    needed = sum(lc.degree_u(u) ** 2 for u in range(lc.u_count)) << (lc.k + lc.m)
    check_cap(needed, h.cap, "exact hypergraph violations")
    tables = member.reshape(lc.v_count, h.copy_size).astype(np.int64)
    memo = {}

    def corr(v, flip, res):
        key = (v, flip, res)
        if key not in memo:
            memo[key] = pair_correlation(tables[v], tables[v], flip, res)
        return memo[key]

    total = Fraction(0)
    for w, u, e1, e2 in lc.triples():
        v, vw = lc.edges[e1][1], lc.edges[e2][1]
        inner = Fraction(0)
        for conf in h.joint(e1, e2).configurations():
            a = corr(v, conf.x_flip, conf.x_resample)
            if a:
                inner += conf.weight * a * corr(vw, conf.y_flip, conf.y_resample)
        total += w * inner
    return total


def violations_by_enumeration(h, subset):
    """ the same quantity by summing over every enumerated hyperedge """
    member = as_subset(h, subset)
    return sum((w for key, w in h.edges().items() if all(member[i] for i in key)), Fraction(0))


def monochromatic_weight(h, colors, mode="exact", samples=DEFAULT_SAMPLES, seed=0, workers=1):
    """ weight of hyperedges inside either color class """
    colors = np.asarray(colors)
    if colors.shape != (h.vertex_count,):
        raise InputError("coloring must have length {}".format(h.vertex_count))

    def exact():
        return _violations_exact(h, colors == 0) + _violations_exact(h, colors == 1)

    def sample():
        c = colors[h.sample_edges(samples, seed, workers)]
        return estimate((c == c[:, :1]).all(axis=1))
    return run_mode(mode, exact, sample)


def good_vertex_fraction(h, subset, delta):
    """ fraction of copies v with |I intersect H^v| >= (delta/2) 2^m """
    member = as_subset(h, subset).reshape(h.lc.v_count, h.copy_size)
    threshold = parse_fraction(delta) / 2 * h.copy_size
    good = sum(1 for row in member if int(row.sum()) >= threshold)
    return Fraction(good, h.lc.v_count)
