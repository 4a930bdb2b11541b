""" rho-correlated pairs over a finite product space

With probability rho, Y_i = X_i; otherwise Y_i is redrawn from mu_i, independently
per coordinate. Both X and Y have law mu = mu_1 x ... x mu_n.
"""
import itertools
import math
from fractions import Fraction

import numpy as np

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import parse_fraction
from pcpforge.utils.rng import make_rng, chunk_sizes, CHUNK
from pcpforge.distributions.sampler import empirical_tv


class RhoCorrelatedSpace(object):
    """ exact joint of (X, Y) plus a sampler

    Arguments:
        measures: one list of positive rationals per coordinate, each summing to 1;
            coordinate i takes values in range(len(measures[i]))
        rho: exact rational in [0, 1]
    """
    kind = "rho_correlated"

    def __init__(self, measures, rho):
        rho = parse_fraction(rho)
        if not 0 <= rho <= 1:
            raise InputError("rho must lie in [0, 1], got {}".format(rho))
        if len(measures) == 0:
            raise InputError("product space needs at least one coordinate")
        clean = []
        for i, mu in enumerate(measures):
            mu = [parse_fraction(p) for p in mu]
            if len(mu) == 0 or any(p <= 0 for p in mu) or sum(mu) != 1:
                raise InputError("coordinate {} measure must be positive and sum to 1".format(i))
            clean.append(tuple(mu))
        self.measures = tuple(clean)
        self.rho = rho

    @property
    def shape(self):
        return tuple(len(mu) for mu in self.measures)

    def kernel(self, i):
        """ P_i(a, b) = Pr[X_i = a, Y_i = b] """
        mu = self.measures[i]
        return [[mu[a] * ((self.rho if a == b else 0) + (1 - self.rho) * mu[b])
                 for b in range(len(mu))] for a in range(len(mu))]

    def _scaled_kernel(self, i):
        """ integer matrix M and denominator D with P_i = M / D """
        rows = self.kernel(i)
        den = 1
        for row in rows:
            for p in row:
                den = math.lcm(den, p.denominator)
        M = np.empty((len(rows), len(rows)), dtype=object)
        for a, row in enumerate(rows):
            for b, p in enumerate(row):
                M[a, b] = p.numerator * (den // p.denominator)
        return M, den

    def measure(self, subset):
        """ mu(subset) for a boolean array over the space """
        subset = self._as_array(subset)
        total = Fraction(0)
        for point in zip(*np.nonzero(subset)):
            p = Fraction(1)
            for i, a in enumerate(point):
                p *= self.measures[i][a]
            total += p
        return total

    def _as_array(self, subset):
        if isinstance(subset, np.ndarray):
            if subset.shape != self.shape:
                raise InputError("subset shape {} does not match space {}".format(subset.shape, self.shape))
            return subset.astype(bool)
        arr = np.zeros(self.shape, dtype=bool)
        for point in subset:
            arr[tuple(point)] = True
        return arr

    def prob_pair(self, subset_a, subset_b):
        """ exact Pr[X in A, Y in B] by contracting the per-coordinate kernels """
        A = self._as_array(subset_a)
        T = self._as_array(subset_b).astype(np.int64).astype(object)
        den = 1
        for i in range(len(self.measures)):
            M, d = self._scaled_kernel(i)
            T = np.moveaxis(np.tensordot(M, T, axes=([1], [i])), 0, i)
            den *= d
        return Fraction(int(T[A].sum()), den)

    def joint(self):
        """ exact law {(x, y): Fraction} over the full support """
        kernels = [self.kernel(i) for i in range(len(self.measures))]
        out = {}
        for x in itertools.product(*[range(s) for s in self.shape]):
            for y in itertools.product(*[range(s) for s in self.shape]):
                p = Fraction(1)
                for i, (a, b) in enumerate(zip(x, y)):
                    p *= kernels[i][a][b]
                    if p == 0:
                        break
                if p:
                    out[(x, y)] = p
        return out

    def marginals(self):
        """ laws of X and Y per coordinate, both equal to mu """
        out_x, out_y = [], []
        for i in range(len(self.measures)):
            K = self.kernel(i)
            out_x.append(tuple(sum(row, Fraction(0)) for row in K))
            out_y.append(tuple(sum((row[b] for row in K), Fraction(0)) for b in range(len(K))))
        return out_x, out_y

    def sample_many(self, n, seed, labels=()):
        """ (X, Y) as two (n, coordinates) integer arrays """
        xs, ys = [], []
        for c, size in enumerate(chunk_sizes(n, CHUNK)):
            rng = make_rng(seed, "rho", *labels, c)
            X = np.zeros((size, len(self.measures)), dtype=np.int64)
            Y = np.zeros_like(X)
            for i, mu in enumerate(self.measures):
                cdf = np.cumsum([float(p) for p in mu])
                draw = lambda u: np.minimum(np.searchsorted(cdf, u, side="right"), len(mu) - 1)
                x = draw(rng.random(size))
                keep = rng.random(size) < float(self.rho)
                fresh = draw(rng.random(size))
                X[:, i] = x
                Y[:, i] = np.where(keep, x, fresh)
            xs.append(X)
            ys.append(Y)
        if not xs:
            empty = np.zeros((0, len(self.measures)), dtype=np.int64)
            return empty, empty
        return np.concatenate(xs), np.concatenate(ys)

    def pair_table(self):
        """ exact Pr[X = x, Y = y] keyed by the concatenated tuple x + y """
        points = list(itertools.product(*[range(s) for s in self.shape]))
        return {x + y: self.prob_pair([x], [y]) for x in points for y in points}

    def sampler_tv(self, n, seed, labels=()):
        """ TV distance between the law of n sampled pairs and the exact pair table """
        X, Y = self.sample_many(n, seed, labels)
        return empirical_tv(np.hstack([X, Y]), self.pair_table())

    def __repr__(self):
        return "RhoCorrelatedSpace(shape={}, rho={})".format(self.shape, self.rho)


def rho_correlated(measures, rho):
    return RhoCorrelatedSpace(measures, rho)


def uniform_measures(sizes):
    return [[Fraction(1, s)] * s for s in sizes]
