"""Decision procedures for bi-Lipschitz equivalence of dust-like systems.

Pipeline: invariant screening (dimension, rank, cone, positive-rational
span), the permutation fast path, the full-rank and two-branch deciders,
and the iteration-permutation search which is complete for coplanar
systems up to the search budget.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import sympy

from .cones import Cone, cone_equal, coplanar_functional, v_plus_equal
from .errors import IncompatibleSymbolicBases, NotCoplanar
from .lattice import integer_rank, reduce_to_pseudo_basis
from .selfsimilar import ContractionSystem, ITERATION_BUDGET, common_basis, iterate

EQUIVALENT = "EQUIVALENT"
NOT_EQUIVALENT = "NOT_EQUIVALENT"
UNDECIDED = "UNDECIDED"

DIMENSION_TOL = 1e-10
PERMUTATION_CERT_LIMIT = 10_000


@dataclass(frozen=True)
class Verdict:
    result: str
    reason: str
    certificate: Optional[dict] = None
    diagnostics: Optional[dict] = None


def _ratio_multiset(system: ContractionSystem) -> Counter:
    return Counter(system.ratios)


def _dimension_polynomial(system: ContractionSystem):
    x = sympy.Symbol("x")
    expr = sum(x ** int(e[0]) for e in system.exponents) - 1
    return sympy.Poly(expr, x)


def _symbolic_dimensions_equal(e: ContractionSystem, f: ContractionSystem) -> bool:
    """Exact comparison for rank-1 symbolic systems over one generator.

    Each dimension equation reduces to a polynomial with a unique root in
    (0,1); the dimensions agree iff the polynomial gcd still has a root
    there.
    """
    g = sympy.gcd(_dimension_polynomial(e), _dimension_polynomial(f))
    if g.total_degree() == 0:
        return False
    return sympy.Poly(g, sympy.Symbol("x")).count_roots(0, 1) >= 1


def screen_invariants(e: ContractionSystem,
                      f: ContractionSystem) -> Optional[Verdict]:
    """Necessary-invariant screen; first failing invariant wins.

    Checks, in order: Hausdorff dimension, rank, cone equality, and
    equality of the positive-rational spans.  Returns None when all pass.
    """
    try:
        _, e2, f2 = common_basis(e, f)
    except IncompatibleSymbolicBases:
        return Verdict(UNDECIDED, "NO_COMMON_BASIS")
    if e.delta is not None and f.delta is not None:
        if abs(e.delta - f.delta) > DIMENSION_TOL:
            return Verdict(NOT_EQUIVALENT, "dimension",
                           {"invariant": "dimension",
                            "values": [e.delta, f.delta]})
    elif e.is_symbolic and f.is_symbolic and e.dim == 1 and f.dim == 1 \
            and e.basis == f.basis:
        if not _symbolic_dimensions_equal(e, f):
            return Verdict(NOT_EQUIVALENT, "dimension",
                           {"invariant": "dimension",
                            "values": ["distinct dimension-equation roots"]})
    rank_e = integer_rank(e2.exponents)
    rank_f = integer_rank(f2.exponents)
    if rank_e != rank_f:
        return Verdict(NOT_EQUIVALENT, "rank",
                       {"invariant": "rank", "values": [rank_e, rank_f]})
    ce, cf = Cone(e2.exponents), Cone(f2.exponents)
    if not cone_equal(ce, cf):
        return Verdict(NOT_EQUIVALENT, "cone",
                       {"invariant": "cone",
                        "values": [list(map(list, e2.exponents)),
                                   list(map(list, f2.exponents))]})
    if not v_plus_equal(ce, cf):
        return Verdict(NOT_EQUIVALENT, "v_plus",
                       {"invariant": "v_plus", "values": []})
    return None


def decide_full_rank(e: ContractionSystem,
                     f: ContractionSystem) -> Optional[Verdict]:
    """Full-rank decider: applies only when both exponent sets have rank
    equal to their branch count; equivalence is then exactly permutation."""
    if integer_rank(e.exponents) != e.m or integer_rank(f.exponents) != f.m:
        return None
    if _ratio_multiset(e) == _ratio_multiset(f):
        return Verdict(EQUIVALENT, "PERMUTATION", {"tag": "PERMUTATION"})
    return Verdict(NOT_EQUIVALENT, "full_rank_multiset",
                   {"invariant": "full_rank_multiset", "values": []})


def _two_branch_special(exps_a, exps_b) -> bool:
    a = sorted(exps_a)
    b = sorted(exps_b)
    c = a[0]
    if c >= 1 and a == [c, 5 * c] and b == [2 * c, 3 * c]:
        return True
    c = b[0]
    return c >= 1 and b == [c, 5 * c] and a == [2 * c, 3 * c]


def decide_two_branch(e: ContractionSystem,
                      f: ContractionSystem) -> Optional[Verdict]:
    """Complete decider for m = n = 2: permutation, or the one exceptional
    pair of exponent patterns {5,1} vs {3,2} over the same rank-1 group."""
    if e.m != 2 or f.m != 2:
        return None
    if _ratio_multiset(e) == _ratio_multiset(f):
        return Verdict(EQUIVALENT, "PERMUTATION", {"tag": "PERMUTATION"})
    if e.dim == 1 and f.dim == 1 and e.basis == f.basis:
        ea = [v[0] for v in e.exponents]
        fa = [v[0] for v in f.exponents]
        if _two_branch_special(ea, fa):
            return Verdict(EQUIVALENT, "TWO_BRANCH_SPECIAL",
                           {"tag": "TWO_BRANCH_SPECIAL"})
    return Verdict(NOT_EQUIVALENT, "two_branch",
                   {"invariant": "two_branch", "values": []})


def _primitive_root(n: int):
    """(root, exponent) with n == root**exponent and root not a perfect power."""
    fac = sympy.factorint(n)
    g = 0
    for exp in fac.values():
        g = math.gcd(g, exp)
    root = 1
    for p, exp in fac.items():
        root *= int(p) ** (exp // g)
    return root, g


def cardinality_solvable(m: int, n: int) -> bool:
    """Whether m**p == n**q has any solution in positive integers."""
    if m == n:
        return True
    return _primitive_root(m)[0] == _primitive_root(n)[0]


def iteration_candidates(m: int, n: int, p_q_bound: int,
                         iter_budget: int = ITERATION_BUDGET):
    """All (p, q) with m**p == n**q within the bounds, ordered by p+q then p.

    Solvability is decided exactly through prime factorization: m**p can
    equal n**q only when m and n are powers of a common integer.
    """
    if m == n:
        pairs = [(t, t) for t in range(1, p_q_bound + 1)]
    else:
        rm, gm = _primitive_root(m)
        rn, gn = _primitive_root(n)
        if rm != rn:
            return []
        g = math.gcd(gm, gn)
        pairs = []
        t = 1
        while True:
            p, q = (gn // g) * t, (gm // g) * t
            if p > p_q_bound or q > p_q_bound:
                break
            pairs.append((p, q))
            t += 1
    pairs = [
        (p, q) for p, q in pairs
        if m ** p <= iter_budget and n ** q <= iter_budget
    ]
    return sorted(pairs, key=lambda pq: (pq[0] + pq[1], pq[0]))


def _axis_profile(vectors):
    """{axis: (exponent value, multiplicity)} when every vector sits on a
    single coordinate axis with one exponent value per axis, else None."""
    profile = {}
    for v in vectors:
        nz = [(i, x) for i, x in enumerate(v) if x != 0]
        if len(nz) != 1 or nz[0][1] < 0:
            return None
        axis, val = nz[0]
        if axis in profile:
            if profile[axis][0] != val:
                return None
            profile[axis] = (val, profile[axis][1] + 1)
        else:
            profile[axis] = (val, 1)
    return profile


def _axis_counting(e2: ContractionSystem,
                   f2: ContractionSystem) -> Optional[Verdict]:
    """Exact refutation for axis-supported systems over >= 2 axes.

    When every branch of both systems contracts along a single basis axis
    with one exponent value per axis, equivalence forces the ratio
    multisets to be permutations of each other; unequal multisets refute.
    """
    prof_e = _axis_profile(e2.exponents)
    prof_f = _axis_profile(f2.exponents)
    if prof_e is None or prof_f is None:
        return None
    if len(set(prof_e) | set(prof_f)) < 2:
        return None
    return Verdict(NOT_EQUIVALENT, "ITERATION_COUNTING",
                   {"invariant": "ITERATION_COUNTING",
                    "values": [sorted(prof_e.items()),
                               sorted(prof_f.items())]})


def _permutation_witness(e_it: ContractionSystem, f_it: ContractionSystem):
    if e_it.m > PERMUTATION_CERT_LIMIT:
        return None
    buckets = {}
    for j, r in enumerate(f_it.ratios):
        buckets.setdefault(r, []).append(j)
    perm = []
    for r in e_it.ratios:
        perm.append(buckets[r].pop(0))
    return tuple(perm)


def _iteration_search(e: ContractionSystem, f: ContractionSystem,
                      p_q_bound: int) -> Optional[Verdict]:
    """Sound search for p, q making the iterated ratio multisets equal."""
    for p, q in iteration_candidates(e.m, f.m, p_q_bound):
        e_it = iterate(e, p)
        f_it = iterate(f, q)
        if _ratio_multiset(e_it) == _ratio_multiset(f_it):
            cert = {"p": p, "q": q,
                    "permutation": _permutation_witness(e_it, f_it)}
            return Verdict(EQUIVALENT, "ITERATION_PERMUTATION", cert)
    return None


def decide_coplanar(e: ContractionSystem, f: ContractionSystem,
                    p_q_bound: int = 24) -> Verdict:
    """Complete-up-to-budget decider for coplanar systems.

    Searches iteration pairs (p, q); the axis-multiplicity counting
    argument turns a failed search into an exact refutation for the
    axis-supported family, and an impossible cardinality equation
    m**p == n**q refutes outright.
    """
    _, e2, f2 = common_basis(e, f)
    if not coplanar_functional(e2.exponents).present \
            or not coplanar_functional(f2.exponents).present:
        raise NotCoplanar("both systems must be coplanar")
    if _ratio_multiset(e) == _ratio_multiset(f):
        return Verdict(EQUIVALENT, "ITERATION_PERMUTATION",
                       {"p": 1, "q": 1,
                        "permutation": _permutation_witness(e2, f2)})
    counted = _axis_counting(e2, f2)
    if counted is not None:
        return counted
    if not cardinality_solvable(e.m, f.m):
        return Verdict(NOT_EQUIVALENT, "NO_ITERATION_CARDINALITY",
                       {"invariant": "NO_ITERATION_CARDINALITY",
                        "values": [e.m, f.m]})
    found = _iteration_search(e, f, p_q_bound)
    if found is not None:
        return found
    return Verdict(UNDECIDED, "SEARCH_BOUND",
                   {"p_q_bound": p_q_bound})


def _gamma_diagnostics(e: ContractionSystem, f: ContractionSystem) -> dict:
    """Empirical growth comparison along a few shared interior directions."""
    from .frobenius import estimate_gamma, make_defining_data

    _, e2, f2 = common_basis(e, f)
    _, joint = reduce_to_pseudo_basis(
        e2.basis, list(e2.exponents) + list(f2.exponents))
    ve, vf = joint[: e2.m], joint[e2.m:]
    de = make_defining_data(ve)
    df = make_defining_data(vf)
    s = len(ve[0])
    centroid = [sum(v[i] for v in ve) / len(ve) for i in range(s)]
    norm = math.sqrt(sum(c * c for c in centroid))
    theta = tuple(c / norm for c in centroid)
    ge = estimate_gamma(de, theta, k_max=60.0)
    gf = estimate_gamma(df, theta, k_max=60.0)
    return {"theta": list(theta), "gamma_e": ge.gamma_hat,
            "gamma_f": gf.gamma_hat,
            "gap": abs(ge.gamma_hat - gf.gamma_hat)}


def decide(e: ContractionSystem, f: ContractionSystem,
           p_q_bound: int = 24, diagnostics: bool = False) -> Verdict:
    """Full decision pipeline.

    Screening, permutation fast path, the full-rank and two-branch
    deciders, then the iteration search (complete for coplanar pairs up to
    the budget).  Pairs outside every decidable family come back UNDECIDED,
    optionally with growth-function diagnostics attached.
    """
    screened = screen_invariants(e, f)
    if screened is not None:
        return screened
    if _ratio_multiset(e) == _ratio_multiset(f):
        return Verdict(EQUIVALENT, "PERMUTATION", {"tag": "PERMUTATION"})
    _, e2, f2 = common_basis(e, f)
    counted = _axis_counting(e2, f2)
    if counted is not None:
        return counted
    verdict = decide_full_rank(e, f)
    if verdict is not None:
        return verdict
    verdict = decide_two_branch(e, f)
    if verdict is not None:
        return verdict
    both_coplanar = coplanar_functional(e2.exponents).present and \
        coplanar_functional(f2.exponents).present
    if both_coplanar:
        return decide_coplanar(e, f, p_q_bound)
    found = _iteration_search(e, f, p_q_bound)
    if found is not None:
        return found
    diag = None
    if diagnostics:
        diag = _gamma_diagnostics(e, f)
    return Verdict(UNDECIDED, "OUTSIDE_DECIDABLE_FAMILIES", None, diag)
