""" Fourier decoding of proof tables into Label Cover labelings

A right table A_v is decoded by drawing alpha with probability A_alpha^2 and then a
uniform label inside alpha. The empty set and the residual mass 1 - sum A_alpha^2
(positive for indicator tables) abstain; abstaining vertices satisfy no edge.
Left vertices decode from their own table for e3sat and copy a projected
neighbor label for hypergraph / fourss.
"""
from fractions import Fraction
from collections import namedtuple, defaultdict

import numpy as np

from pcpforge.utils.errors import InputError
from pcpforge.utils.misc import popcount, mask_bits
from pcpforge.utils.rng import make_rng
from pcpforge.boolean_fourier import wht
from pcpforge.label_cover import Labeling

VARIANTS = ("hypergraph", "e3sat", "fourss")
TABLE_MODES = ("pm1", "indicator")

DecodingOutcome = namedtuple("DecodingOutcome", [
    "labeling", "abstain_left", "abstain_right", "satisfied_fraction", "expected_value"])


class _SpectrumDraw(object):
    """ exact integer draw of alpha with probability A_alpha^2 """
    def __init__(self, table, mode):
        table = table.to_indicator() if mode == "indicator" else table.to_pm1()
        spec = wht(table)
        self.dim = spec.dim
        self.total = 1 << (2 * spec.dim)
        self.cumulative = np.cumsum(spec.squared_weights())
        # P(j) = sum over alpha containing j of A_alpha^2 / |alpha|
        self.label_probs = defaultdict(Fraction)
        for alpha in spec.support():
            if alpha == 0:
                continue
            w = spec.squared(alpha) / popcount(alpha)
            for j in mask_bits(alpha):
                self.label_probs[j] += w

    def draw(self, rng):
        """ a label in [dim], or None to abstain """
        r = int(rng.integers(0, self.total))
        alpha = int(np.searchsorted(self.cumulative, r, side="right"))
        if alpha >= len(self.cumulative) or alpha == 0:
            return None
        bits = mask_bits(alpha)
        return bits[int(rng.integers(0, len(bits)))]


class Decoder(object):
    """ Decoding procedure for one (instance, proofs, variant), spectra computed once.

    Arguments:
        lc: LabelCoverInstance
        proofs: ProofAssignment
        variant: "hypergraph", "e3sat" or "fourss"
        table_mode: "pm1" decodes the tables as given, "indicator" decodes (1 + A) / 2
    """
    def __init__(self, lc, proofs, variant, table_mode="pm1"):
        if variant not in VARIANTS:
            raise InputError("unknown decoding variant {!r}".format(variant))
        if table_mode not in TABLE_MODES:
            raise InputError("unknown table mode {!r}".format(table_mode))
        if len(proofs.right) != lc.v_count or any(t.dim != lc.m for t in proofs.right):
            raise InputError("a right table of dimension m is required for every v")
        if variant == "e3sat" and (len(proofs.left) != lc.u_count
                                   or any(t.dim != lc.k for t in proofs.left)):
            raise InputError("e3sat decoding needs a left table of dimension k for every u")
        self.lc = lc
        self.variant = variant
        self.table_mode = table_mode
        self.right = [_SpectrumDraw(t, table_mode) for t in proofs.right]
        self.left = [_SpectrumDraw(t, table_mode) for t in proofs.left] if variant == "e3sat" else None

    def decode(self, seed, index=0):
        """ one decode on the stream (seed, "decode", variant, index) """
        lc = self.lc
        rng = make_rng(seed, "decode", self.variant, index)
        right = [d.draw(rng) for d in self.right]
        left = []
        for u in range(lc.u_count):
            if self.left is not None:
                left.append(self.left[u].draw(rng))
                continue
            edges = lc.edges_of_u(u)
            e = edges[int(rng.integers(0, len(edges)))]
            label = right[lc.edges[e][1]]
            left.append(None if label is None else lc.projections[e][label])
        hits = 0
        for (u, v), pi in zip(lc.edges, lc.projections):
            if left[u] is not None and right[v] is not None and pi[right[v]] == left[u]:
                hits += 1
        labeling = Labeling([0 if l is None else l for l in left], [0 if l is None else l for l in right])
        return DecodingOutcome(
            labeling,
            tuple(l is None for l in left),
            tuple(l is None for l in right),
            Fraction(hits, lc.n_edges),
            None,
        )

    def _image_probs(self, v, e):
        """ law of pi_e(l_v), missing mass is the abstain probability """
        out = defaultdict(Fraction)
        for j, p in self.right[v].label_probs.items():
            out[self.lc.projections[e][j]] += p
        return out

    def expected_value(self):
        """ exact E[satisfied fraction] over the decoding randomness """
        lc = self.lc
        total = Fraction(0)
        for e, (u, v) in enumerate(lc.edges):
            pi = lc.projections[e]
            probs_v = self.right[v].label_probs
            if self.left is not None:
                probs_u = self.left[u].label_probs
                total += sum((p * probs_u.get(pi[j], 0) for j, p in probs_v.items()), Fraction(0))
                continue
            edges = lc.edges_of_u(u)
            term = Fraction(0)
            image = self._image_probs(v, e)
            for e2 in edges:
                v2 = lc.edges[e2][1]
                if v2 == v:
                    pi2 = lc.projections[e2]
                    term += sum((p for j, p in probs_v.items() if pi[j] == pi2[j]), Fraction(0))
                else:
                    image2 = self._image_probs(v2, e2)
                    term += sum((p * image2.get(i, 0) for i, p in image.items()), Fraction(0))
            total += term / len(edges)
        return total / lc.n_edges


def decode_labeling(lc, proofs, seed, variant, table_mode="pm1", exact=False):
    """ one seeded decode; with exact=True the outcome also carries the exact expectation """
    decoder = Decoder(lc, proofs, variant, table_mode)
    outcome = decoder.decode(seed)
    if exact:
        outcome = outcome._replace(expected_value=decoder.expected_value())
    return outcome


def expected_decoded_value(lc, proofs, variant, table_mode="pm1"):
    return Decoder(lc, proofs, variant, table_mode).expected_value()
