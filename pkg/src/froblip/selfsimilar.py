"""Contraction systems: dimension, iteration, cut-sets and matchability.

A contraction system packages a vector of similarity ratios with its exact
exponent-lattice coordinates: a pseudo-basis, integer exponent vectors, a
rational half-space certificate, and (for numeric ratios) the Hausdorff
dimension from the dimension equation sum rho_j^delta = 1.
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath

from . import flows
from .cones import Cone, half_space_certificate
from .errors import (
    BasisMismatch,
    FroblipError,
    IncompatibleSymbolicBases,
    ResourceLimit,
    ThresholdTie,
)
from .lattice import (
    Monomial,
    PseudoBasis,
    factor_rationals,
    parse_rational,
    reduce_to_pseudo_basis,
)

TIE_EPS = 1e-12
MP_PRECISION = 200  # bits, for e^{-k} threshold comparisons
DEFAULT_WORD_BUDGET = 500_000
ITERATION_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ExpThreshold:
    """Threshold e^{-k}; for symbolic rank-1 systems this is the exponent
    level k directly (the generator plays the role of 1/e)."""

    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        if self.k <= 0:
            raise FroblipError("threshold exponent must be positive")


Threshold = Union[Fraction, ExpThreshold, Monomial]


@dataclass(frozen=True)
class ContractionSystem:
    ratios: tuple
    basis: PseudoBasis
    exponents: tuple
    delta: Optional[float]
    alpha: tuple

    @property
    def m(self) -> int:
        return len(self.ratios)

    @property
    def dim(self) -> int:
        return self.basis.size

    @property
    def is_symbolic(self) -> bool:
        return not self.basis.is_numeric

    def word_exponent(self, word: Sequence[int]) -> tuple:
        """Summed exponent vector of a 1-based word over the alphabet."""
        s = self.dim
        acc = [0] * s
        for letter in word:
            for i, e in enumerate(self.exponents[letter - 1]):
                acc[i] += e
        return tuple(acc)

    def word_ratio(self, word: Sequence[int]):
        r = self.ratios[word[0] - 1]
        for letter in word[1:]:
            r = r * self.ratios[letter - 1]
        return r

    def cone(self) -> Cone:
        return Cone(tuple(self.exponents))


def hausdorff_dimension(ratios: Sequence[Fraction]) -> float:
    """Unique delta > 0 with sum ratios**delta == 1, to |residual| <= 1e-13."""
    rs = [float(r) for r in ratios]
    if len(rs) < 2 or any(not 0 < r < 1 for r in rs):
        raise FroblipError("need m >= 2 ratios in (0,1)")

    def f(d):
        return sum(r ** d for r in rs) - 1.0

    lo, hi = 0.0, 1.0
    while f(hi) > 0:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-14:
            break
    d = (lo + hi) / 2
    for _ in range(5):  # Newton polish
        fd = f(d)
        dfd = sum((r ** d) * math.log(r) for r in rs)
        if dfd == 0:
            break
        d -= fd / dfd
    return d


def _parse_ratio_value(spec):
    if isinstance(spec, str):
        return parse_rational(spec)
    if isinstance(spec, (Fraction, Monomial)):
        return spec
    if isinstance(spec, (int, float)):
        raise FroblipError(
            "ratios must be exact rationals or formal monomials, not floats"
        )
    raise FroblipError(f"unsupported ratio spec {spec!r}")


def build_system(ratios: Sequence) -> ContractionSystem:
    """Assemble a contraction system from exact ratio specs.

    Rational ratios are factored over reciprocal primes; monomial ratios
    use their named generators.  The basis is then reduced to the exact
    rank of the ratio group, a rational half-space certificate is computed,
    and (numeric case) the Hausdorff dimension is solved.
    """
    values = [_parse_ratio_value(r) for r in ratios]
    if len(values) < 2:
        raise FroblipError("a contraction system needs m >= 2 ratios")
    kinds = {isinstance(v, Monomial) for v in values}
    if len(kinds) > 1:
        raise FroblipError("cannot mix rational and symbolic ratios")
    if kinds == {True}:
        gens = sorted({g for v in values for g in v.generators})
        for v in values:
            d = v.as_dict()
            if not d or any(e < 0 for e in d.values()):
                raise FroblipError(
                    f"monomial ratio {v} must have nonnegative, not all zero exponents"
                )
        basis = PseudoBasis(tuple(Monomial.generator(g) for g in gens))
        vectors = [tuple(v.as_dict().get(g, 0) for g in gens) for v in values]
        delta = None
    else:
        for v in values:
            if not 0 < v < 1:
                raise FroblipError(f"ratio {v} outside (0,1)")
        basis, vectors = factor_rationals(values)
        delta = hausdorff_dimension(values)
    basis, vectors = reduce_to_pseudo_basis(basis, vectors)
    alpha = half_space_certificate(Cone(tuple(vectors))).alpha
    return ContractionSystem(tuple(values), basis, tuple(vectors), delta, alpha)


def iterate(system: ContractionSystem, p: int,
            budget: int = ITERATION_BUDGET) -> ContractionSystem:
    """The p-th iteration: all length-p products, lexicographic word order."""
    if p < 1:
        raise FroblipError("iteration order must be >= 1")
    if system.m ** p > budget:
        raise ResourceLimit(f"iteration produces {system.m ** p} ratios")
    if p == 1:
        return system
    ratios = []
    exponents = []
    for word in itertools.product(range(1, system.m + 1), repeat=p):
        ratios.append(system.word_ratio(word))
        exponents.append(system.word_exponent(word))
    if system.delta is not None:
        if len(ratios) <= 100_000:
            total = sum(float(r) ** system.delta for r in ratios)
        else:
            total = sum(float(r) ** system.delta for r in system.ratios) ** p
        if abs(total - 1.0) > 1e-12 * len(ratios) ** 0.5 + 1e-12:
            raise FroblipError("iteration broke the dimension equation")
    return ContractionSystem(tuple(ratios), system.basis, tuple(exponents),
                             system.delta, system.alpha)


def _mp_alpha(system: ContractionSystem):
    with mpmath.workprec(MP_PRECISION):
        return tuple(-mpmath.log(mpmath.mpf(v.numerator) / v.denominator)
                     for v in system.basis.values)


def _ratio_below(system: ContractionSystem, exponent, t: Threshold,
                 mp_alpha=None) -> bool:
    """Exact decision of basis**exponent <= t."""
    if isinstance(t, Fraction):
        if system.is_symbolic:
            raise FroblipError("rational thresholds need a numeric system")
        return system.basis.eval_exact(exponent) <= t
    if isinstance(t, Monomial):
        # symbolic threshold: must be a power of the (single) reduced generator
        if not system.is_symbolic or system.dim != 1:
            raise FroblipError("monomial thresholds need a symbolic rank-1 system")
        base = system.basis.values[0]
        d = t.as_dict()
        bd = base.as_dict()
        if set(d) != set(bd):
            raise BasisMismatch(f"threshold {t} not a power of {base}")
        (g, e), = d.items()
        level, rem = divmod(e, bd[g])
        if rem != 0:
            raise BasisMismatch(f"threshold {t} not a power of {base}")
        return exponent[0] >= level
    if isinstance(t, ExpThreshold):
        if system.is_symbolic:
            if system.dim != 1:
                raise FroblipError(
                    "exponent thresholds on symbolic systems need rank 1"
                )
            return Fraction(exponent[0]) >= t.k
        with mpmath.workprec(MP_PRECISION):
            score = mpmath.fsum(a * e for a, e in zip(mp_alpha, exponent))
            diff = score - mpmath.mpf(t.k.numerator) / t.k.denominator
            if abs(diff) < TIE_EPS:
                raise ThresholdTie(
                    f"exponent {tuple(exponent)} within {TIE_EPS} of the threshold"
                )
            return diff > 0
    raise FroblipError(f"unsupported threshold {t!r}")


@dataclass(frozen=True)
class CutSet:
    """Maximal antichain of words whose ratio first drops to <= t."""

    threshold: Threshold
    words: tuple
    ratios: tuple
    exponents: tuple


def cut_set(system: ContractionSystem, t: Threshold,
            word_budget: int = DEFAULT_WORD_BUDGET) -> CutSet:
    """Depth-first enumeration of the cut-set at threshold t.

    Descends while the prefix ratio stays above t; each emitted word w has
    ratio(w) <= t < ratio(parent of w).
    """
    mp_alpha = _mp_alpha(system) if (
        isinstance(t, ExpThreshold) and not system.is_symbolic) else None
    zero = (0,) * system.dim
    out_words = []
    out_exps = []
    stack = [((), zero)]
    emitted = 0
    while stack:
        word, exp = stack.pop()
        for letter in range(system.m, 0, -1):
            nw = word + (letter,)
            ne = tuple(a + b for a, b in
                       zip(exp, system.exponents[letter - 1]))
            if _ratio_below(system, ne, t, mp_alpha):
                out_words.append(nw)
                out_exps.append(ne)
                emitted += 1
                if emitted > word_budget:
                    raise ResourceLimit(f"cut-set exceeds {word_budget} words")
            else:
                stack.append((nw, ne))
    order = sorted(range(len(out_words)), key=lambda i: out_words[i])
    words = tuple(out_words[i] for i in order)
    exps = tuple(out_exps[i] for i in order)
    ratios = tuple(system.word_ratio(w) for w in words)
    return CutSet(t, words, ratios, exps)


def cut_multiset(system: ContractionSystem, t: Threshold,
                 point_budget: int = DEFAULT_WORD_BUDGET) -> dict:
    """Cut-set aggregated per lattice point: {exponent point: word count}.

    Counts are computed by the prefix dynamic program (no word
    enumeration), so deep thresholds with astronomically many words stay
    cheap: only lattice points are visited.
    """
    mp_alpha = _mp_alpha(system) if (
        isinstance(t, ExpThreshold) and not system.is_symbolic) else None
    zero = (0,) * system.dim
    score = lambda z: sum(a * Fraction(x) for a, x in zip(system.alpha, z))
    prefix = {}
    cut = {}
    heap = [(Fraction(0), zero)]
    queued = {zero}
    while heap:
        _, z = heapq.heappop(heap)
        if z == zero:
            inflow = 1
        else:
            inflow = sum(
                prefix.get(tuple(a - b for a, b in zip(z, v)), 0)
                for v in system.exponents
            )
            if inflow == 0:
                continue
        if len(prefix) + len(cut) > point_budget:
            raise ResourceLimit("cut-set point budget exceeded")
        if _ratio_below(system, z, t, mp_alpha) and z != zero:
            cut[z] = cut.get(z, 0) + inflow
            continue
        prefix[z] = inflow
        for v in system.exponents:
            nxt = tuple(a + b for a, b in zip(z, v))
            if nxt not in queued:
                queued.add(nxt)
                heapq.heappush(heap, (score(nxt), nxt))
    return cut


def a_k_set(system: ContractionSystem, k) -> dict:
    """Lattice points visited by the cut-set at threshold e^{-k}, with
    big-integer word counts per point."""
    return cut_multiset(system, ExpThreshold(Fraction(k)))


def common_basis(a: ContractionSystem, b: ContractionSystem):
    """Re-express two systems over one merged pseudo-basis.

    Numeric systems merge their reciprocal-prime bases (union of primes,
    exponents re-derived from the ratios); symbolic systems must share the
    same named generators.
    """
    if a.is_symbolic != b.is_symbolic:
        raise IncompatibleSymbolicBases(
            "cannot merge numeric and symbolic systems"
        )
    if not a.is_symbolic:
        basis, vectors = factor_rationals(list(a.ratios) + list(b.ratios))
        va, vb = vectors[: a.m], vectors[a.m:]
    else:
        gens_a = sorted({g for v in a.ratios for g in v.generators})
        gens_b = sorted({g for v in b.ratios for g in v.generators})
        if gens_a != gens_b:
            raise IncompatibleSymbolicBases(
                f"generators {gens_a} vs {gens_b} have no known relation"
            )
        basis = PseudoBasis(tuple(Monomial.generator(g) for g in gens_a))
        va = [tuple(v.as_dict().get(g, 0) for g in gens_a) for v in a.ratios]
        vb = [tuple(v.as_dict().get(g, 0) for g in gens_a) for v in b.ratios]
    alpha = half_space_certificate(Cone(tuple(va) + tuple(vb))).alpha
    a2 = ContractionSystem(a.ratios, basis, tuple(va), a.delta, alpha)
    b2 = ContractionSystem(b.ratios, basis, tuple(vb), b.delta, alpha)
    return basis, a2, b2


def h_distance(system_e: ContractionSystem, word_i: Sequence[int],
               system_f: ContractionSystem, word_j: Sequence[int]):
    """Euclidean exponent distance between two words; also the exact square.

    Both systems must already live over the same pseudo-basis.
    """
    if system_e.basis != system_f.basis:
        raise BasisMismatch("systems are not over a common pseudo-basis")
    ke = system_e.word_exponent(word_i)
    kf = system_f.word_exponent(word_j)
    sq = sum((x - y) ** 2 for x, y in zip(ke, kf))
    return math.sqrt(sq), sq


@dataclass(frozen=True)
class MatchReport:
    feasible: bool
    m0: int
    relation_size: Optional[int]
    witness: Optional[tuple]


def matchable(e: ContractionSystem, f: ContractionSystem, t: Threshold,
              m0: int, witness_budget: int = 2000) -> MatchReport:
    """Feasibility of a degree-[1, m0] relation between the two cut-sets
    with exponent distance at most m0 on every related pair.

    Decided on the per-lattice-point aggregation (words at one point are
    interchangeable; the underlying flow matrix is totally unimodular, so
    aggregated feasibility equals word-level feasibility).  A word-level
    witness is extracted when both cut-sets are small enough.
    """
    if m0 < 1:
        raise FroblipError("m0 must be >= 1")
    _, e2, f2 = common_basis(e, f)
    left = cut_multiset(e2, t)
    right = cut_multiset(f2, t)
    if not left or not right:
        raise FroblipError("empty cut-set")
    m0_sq = m0 * m0

    def allowed(z, w):
        return sum((x - y) ** 2 for x, y in zip(z, w)) <= m0_sq

    pairs = flows.degree_constrained_relation(left, right, allowed, m0)
    if pairs is None:
        return MatchReport(False, m0, None, None)
    size = sum(pairs.values())
    witness = None
    n_left = sum(left.values())
    n_right = sum(right.values())
    if n_left <= witness_budget and n_right <= witness_budget:
        cs_e = cut_set(e2, t)
        cs_f = cut_set(f2, t)
        edges = [
            (i, j)
            for i, ze in enumerate(cs_e.exponents)
            for j, zf in enumerate(cs_f.exponents)
            if allowed(ze, zf)
        ]
        rel = flows.word_level_relation(len(cs_e.words), len(cs_f.words),
                                        edges, m0)
        if rel is not None:
            witness = tuple((cs_e.words[i], cs_f.words[j]) for i, j in rel)
    return MatchReport(True, m0, size, witness)


def matchable_search(e: ContractionSystem, f: ContractionSystem, t: Threshold,
                     m0_limit: int = 64) -> MatchReport:
    """Doubling probe for the smallest feasible m0 <= m0_limit."""
    m0 = 1
    report = None
    while m0 <= m0_limit:
        report = matchable(e, f, t, m0)
        if report.feasible:
            return report
        m0 *= 2
    return report
