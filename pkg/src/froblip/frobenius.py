"""Lattice-path counting for defining data in an open half-space.

The central object is the multiplicity table: for integer step vectors
X_1..X_m with X_j . alpha > 0, the number of words over {1..m} whose step
sum reaches a lattice point z.  Counts are exact big integers, computed by
a dynamic program processed in increasing z . alpha order (every
predecessor of a point has strictly smaller score, so the recurrence is
well-founded).
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .cones import Cone, HalfSpaceCertificate, cone_member, half_space_certificate
from .errors import (
    DirectionOutsideCone,
    FroblipError,
    GcdNotOne,
    QueryOutOfRange,
    ResourceLimit,
)

SNAP_DENOM = 2 ** 48  # float query points are snapped to this denominator
R_CAP = 8  # nearest-point search radius cap (Euclidean)
DEFAULT_POINT_BUDGET = 2_000_000


@dataclass(frozen=True)
class DefiningData:
    """Integer step vectors together with a strict half-space certificate."""

    vectors: tuple
    alpha: tuple

    def __post_init__(self):
        for v in self.vectors:
            if sum(Fraction(a) * x for a, x in zip(self.alpha, v)) <= 0:
                raise FroblipError(f"vector {v} violates the half-space condition")

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    @property
    def cone(self) -> Cone:
        return Cone(tuple(self.vectors))

    def score(self, x: Sequence) -> Fraction:
        return sum(Fraction(a) * Fraction(x_i) for a, x_i in zip(self.alpha, x))


def make_defining_data(vectors: Sequence[Sequence[int]],
                       alpha: Optional[Sequence] = None) -> DefiningData:
    """Assemble defining data, deriving a rational certificate when absent."""
    vecs = tuple(tuple(map(int, v)) for v in vectors)
    if alpha is None:
        alpha = half_space_certificate(Cone(vecs)).alpha
    return DefiningData(vecs, tuple(Fraction(a) for a in alpha))


def _dp_counts(vectors, step_scores, bound, point_budget):
    """Shared DP core: counts over all points with score <= bound.

    ``step_scores`` may be Fractions (exact) or mpmath floats; scores only
    order the sweep and gate the bound, counts themselves are exact ints.
    """
    s = len(vectors[0])
    zero = (0,) * s
    counts = {}
    heap = [(step_scores[0] * 0, zero)]
    queued = {zero}
    while heap:
        sc, z = heapq.heappop(heap)
        if z == zero:
            m = 1
        else:
            m = 0
            for v in vectors:
                pred = tuple(a - b for a, b in zip(z, v))
                m += counts.get(pred, 0)
        counts[z] = m
        if len(counts) > point_budget:
            raise ResourceLimit(
                f"multiplicity table exceeded {point_budget} lattice points"
            )
        for v, w in zip(vectors, step_scores):
            nxt = tuple(a + b for a, b in zip(z, v))
            if nxt in queued:
                continue
            nsc = sc + w
            if nsc <= bound:
                queued.add(nxt)
                heapq.heappush(heap, (nsc, nxt))
    return counts


@dataclass
class MultiplicityTable:
    """Exact path counts over the truncated region z . alpha <= bound."""

    data: DefiningData
    bound: Fraction
    counts: dict = field(repr=False)

    @property
    def max_step(self) -> Fraction:
        return max(self.data.score(v) for v in self.data.vectors)

    @property
    def fully_determined_bound(self) -> Fraction:
        """Score level below which nearest-point queries are safe.

        Leaves room for the R_CAP search ball so that no relevant lattice
        point can be missing from the table.
        """
        alpha_norm = math.sqrt(sum(float(a) ** 2 for a in self.data.alpha))
        margin = Fraction(math.ceil(R_CAP * alpha_norm + 1))
        return self.bound - margin


def build_multiplicity(data: DefiningData, bound,
                       point_budget: int = DEFAULT_POINT_BUDGET) -> MultiplicityTable:
    """Exact DP over lattice points with z . alpha <= bound."""
    bound = Fraction(bound)
    if bound <= 0:
        raise FroblipError("bound must be positive")
    step_scores = [data.score(v) for v in data.vectors]
    counts = _dp_counts(data.vectors, step_scores, bound, point_budget)
    return MultiplicityTable(data, bound, counts)


def _snap(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(round(value * SNAP_DENOM), SNAP_DENOM)
    return Fraction(value)


def multiplicity_at(table: MultiplicityTable, x: Sequence) -> int:
    """Multiplicity at x, extended off-lattice by the nearest-point rule.

    Lattice points of the semigroup return their exact count; any other
    point in the cone returns the minimum count among the nearest semigroup
    points, with distance ties resolved exactly on squared distances.
    """
    xs = tuple(_snap(v) for v in x)
    if table.data.score(xs) > table.fully_determined_bound:
        raise QueryOutOfRange("query beyond the table's determined region")
    if all(v.denominator == 1 for v in xs):
        key = tuple(int(v) for v in xs)
        if table.counts.get(key, 0) >= 1:
            return table.counts[key]
    xf = np.array([float(v) for v in xs])
    # float prefilter, then exact comparison on the shortlisted candidates
    best_f = None
    pts = []
    for z, m in table.counts.items():
        if m < 1:
            continue
        d2 = float(np.sum((np.array(z, dtype=float) - xf) ** 2))
        pts.append((d2, z, m))
        if best_f is None or d2 < best_f:
            best_f = d2
    if best_f is None or best_f > R_CAP ** 2 + 1:
        raise QueryOutOfRange("no semigroup point within the search radius")
    shortlist = [(z, m) for d2, z, m in pts if d2 <= best_f + 1e-6]
    best_d2 = None
    best_m = None
    for z, m in shortlist:
        d2 = sum((Fraction(zi) - xi) ** 2 for zi, xi in zip(z, xs))
        if best_d2 is None or d2 < best_d2:
            best_d2, best_m = d2, m
        elif d2 == best_d2 and m < best_m:
            best_m = m
    if best_d2 > Fraction(R_CAP ** 2):
        raise QueryOutOfRange("no semigroup point within the search radius")
    return best_m


def log_big(n: int) -> float:
    """Natural log of a positive big integer, relative error < 1e-12."""
    if n <= 0:
        raise FroblipError("log_big needs a positive integer")
    shift = max(n.bit_length() - 53, 0)
    return math.log(n >> shift) + shift * math.log(2)


@dataclass(frozen=True)
class GrowthEstimate:
    """OLS estimate of the exponential growth of counts along a ray."""

    theta: tuple
    gamma_hat: float
    samples: tuple  # (k, log m(k theta)) pairs at increasing k
    stderr: float


def estimate_gamma(data: DefiningData, theta: Sequence[float],
                   k_max: float = 120.0, k_count: int = 12,
                   table: Optional[MultiplicityTable] = None,
                   point_budget: int = DEFAULT_POINT_BUDGET) -> GrowthEstimate:
    """Empirical directional growth rate: slope of log count versus k.

    Samples k_count geometrically spaced radii up to k_max and fits an
    ordinary least-squares line; the slope estimator suppresses the
    O(log k / k) bias of polynomial prefactors in the counts.  Boundary
    directions are accepted (with slower convergence).
    """
    norm = math.sqrt(sum(float(t) ** 2 for t in theta))
    th = tuple(float(t) / norm for t in theta)
    th_snap = tuple(_snap(t) for t in th)
    if not cone_member(th_snap, data.cone):
        raise DirectionOutsideCone(f"direction {th} outside the cone")
    ks = np.geomspace(k_max / 16.0, k_max, k_count)
    if table is None:
        theta_score = float(data.score(th_snap))
        alpha_norm = math.sqrt(sum(float(a) ** 2 for a in data.alpha))
        bound = Fraction(
            math.ceil(k_max * theta_score + R_CAP * alpha_norm + float(  # noqa: E501
                max(data.score(v) for v in data.vectors)) + 2)
        )
        table = build_multiplicity(data, bound, point_budget)
    samples = []
    for k in ks:
        point = tuple(k * t for t in th)
        m = multiplicity_at(table, point)
        samples.append((float(k), log_big(m)))
    xs = np.array([k for k, _ in samples])
    ys = np.array([v for _, v in samples])
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = ys - (slope * xs + intercept)
    dof = max(len(xs) - 2, 1)
    sxx = float(np.sum((xs - xs.mean()) ** 2))
    stderr = math.sqrt(float(np.sum(resid ** 2)) / dof / sxx) if sxx > 0 else 0.0
    return GrowthEstimate(th, max(float(slope), 0.0), tuple(samples), stderr)


def frobenius_number_1d(a: Sequence[int]) -> int:
    """Classical Frobenius number by a DP sieve up to the Schur bound.

    Returns -1 when 1 is among the generators (every natural number is
    representable, and the convention (g+1+N) within the semigroup gives
    g = -1).
    """
    a = [int(v) for v in a]
    if len(a) < 2 or any(v < 1 for v in a) or all(v < 2 for v in a):
        raise FroblipError("need m >= 2 positive integers, some >= 2")
    if 1 in a:
        return -1
    g = math.gcd(*a)
    if g != 1:
        raise GcdNotOne(f"gcd of {a} is {g}")
    limit = min(a) * max(a)
    reach = [False] * (limit + 1)
    reach[0] = True
    for i in range(1, limit + 1):
        reach[i] = any(i >= v and reach[i - v] for v in a)
    return max(i for i in range(limit + 1) if not reach[i])


def relative_density_radius(data: DefiningData, probe_bound,
                            table: Optional[MultiplicityTable] = None) -> float:
    """Empirical relative-denseness radius of the semigroup in its cone.

    Probes a half-integer grid of cone points with score in
    [probe_bound/2, 3*probe_bound/4] and reports the largest distance to
    the semigroup.  Diagnostic only, never used in decision logic.
    """
    K = Fraction(probe_bound)
    if table is None:
        table = build_multiplicity(data, K)
    pts = [z for z, m in table.counts.items() if m >= 1]
    if not pts:
        raise FroblipError("empty semigroup table")
    arr = np.array(pts, dtype=float)
    lo = arr.min(axis=0) - 1.0
    hi = arr.max(axis=0) + 1.0
    s = data.dim
    axes = [np.arange(lo[i], hi[i] + 0.25, 0.5) for i in range(s)]
    grids = np.meshgrid(*axes, indexing="ij")
    coords = np.stack([g.ravel() for g in grids], axis=-1)
    alpha = np.array([float(a) for a in data.alpha])
    scores = coords @ alpha
    band = (scores >= float(K) / 2) & (scores <= 3 * float(K) / 4)
    coords = coords[band]
    if coords.shape[0] > 200_000:
        raise ResourceLimit("density probe grid too large")
    worst = 0.0
    for x in coords:
        if not cone_member(tuple(_snap(float(v)) for v in x), data.cone):
            continue
        d = math.sqrt(float(np.min(np.sum((arr - x) ** 2, axis=1))))
        worst = max(worst, d)
    return worst
