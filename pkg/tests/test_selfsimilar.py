import itertools
import math
from fractions import Fraction

import pytest

from froblip.errors import (
    BasisMismatch,
    FroblipError,
    IncompatibleSymbolicBases,
    ThresholdTie,
)
from froblip.lattice import Monomial
from froblip.selfsimilar import (
    ExpThreshold,
    a_k_set,
    build_system,
    common_basis,
    cut_multiset,
    cut_set,
    h_distance,
    hausdorff_dimension,
    iterate,
    matchable,
    matchable_search,
)

F = Fraction


def test_hausdorff_dimension_known_values():
    # frozen closed forms: equal ratios give log m / log(1/r)
    assert abs(hausdorff_dimension([F(1, 3)] * 2) - math.log(2) / math.log(3)) < 1e-12
    assert abs(hausdorff_dimension([F(1, 2)] * 2) - 1.0) < 1e-12
    assert abs(hausdorff_dimension([F(1, 4)] * 2) - 0.5) < 1e-12
    # golden-ratio case: (1/2)^d + (1/4)^d = 1 gives 2^d = golden ratio
    d = hausdorff_dimension([F(1, 2), F(1, 4)])
    assert abs(2 ** d - (1 + math.sqrt(5)) / 2) < 1e-12


def test_hausdorff_dimension_residual():
    rs = [F(1, 3), F(1, 5), F(1, 7), F(2, 11)]
    d = hausdorff_dimension(rs)
    assert abs(sum(float(r) ** d for r in rs) - 1.0) <= 1e-13


def test_build_system_numeric():
    s = build_system(["1/3", "1/3"])
    assert s.ratios == (F(1, 3), F(1, 3))
    assert s.basis.values == (F(1, 3),)
    assert s.exponents == ((1,), (1,))
    assert abs(s.delta - math.log(2) / math.log(3)) < 1e-12


def test_build_system_symbolic():
    s = build_system([Monomial.make({"l": 5}), Monomial.make({"l": 1})])
    assert s.is_symbolic
    assert s.delta is None
    assert s.exponents == ((5,), (1,))


def test_build_system_rejects_floats_and_singletons():
    with pytest.raises(FroblipError):
        build_system([0.5, 0.25])
    with pytest.raises(FroblipError):
        build_system(["1/2"])


def test_iterate_products():
    s = build_system(["1/2", "1/4"])
    s2 = iterate(s, 2)
    assert s2.ratios == (F(1, 4), F(1, 8), F(1, 8), F(1, 16))
    assert s2.exponents == ((2,), (3,), (3,), (4,))
    assert s2.delta == s.delta
    assert iterate(s, 1) is s


def test_iterate_exponent_sums():
    s = build_system(["1/2", "1/3"])
    s3 = iterate(s, 3)
    words = list(itertools.product((1, 2), repeat=3))
    for w, r, e in zip(words, s3.ratios, s3.exponents):
        assert r == s.word_ratio(w)
        assert e == s.word_exponent(w)


def test_cut_set_worked_example():
    # rho=(1/2,1/4) at t=1/4: the cut-set is exactly {11, 12, 2}
    s = build_system(["1/2", "1/4"])
    cs = cut_set(s, F(1, 4))
    assert cs.words == ((1, 1), (1, 2), (2,))
    assert cs.ratios == (F(1, 4), F(1, 8), F(1, 4))


def test_cut_set_antichain_moran_sum():
    # maximal antichain: sum over the cut-set of rho_i^delta == 1
    for ratios, t in [
        (["1/2", "1/4"], F(1, 10)),
        (["1/3", "1/3"], F(1, 7)),
        (["1/2", "1/3", "1/6"], F(1, 5)),
    ]:
        s = build_system(ratios)
        cs = cut_set(s, t)
        total = sum(float(r) ** s.delta for r in cs.ratios)
        assert abs(total - 1.0) < 1e-10


def test_cut_set_threshold_sandwich():
    s = build_system(["1/2", "1/3"])
    t = F(1, 9)
    cs = cut_set(s, t)
    for w, r in zip(cs.words, cs.ratios):
        assert r <= t
        parent = s.word_ratio(w[:-1]) if len(w) > 1 else F(1)
        assert parent > t


def test_cut_set_symbolic_levels():
    s = build_system([Monomial.make({"l": 2}), Monomial.make({"l": 3})])
    cs = cut_set(s, ExpThreshold(F(4)))
    for w, e in zip(cs.words, cs.exponents):
        assert e[0] >= 4
        parent = s.word_exponent(w[:-1])
        assert parent[0] < 4


def test_cut_multiset_matches_cut_set():
    for ratios, t in [
        (["1/2", "1/4"], F(1, 16)),
        (["1/2", "1/3"], F(1, 20)),
        (["1/2", "1/2"], ExpThreshold(F(5))),
    ]:
        s = build_system(ratios)
        cs = cut_set(s, t)
        agg = {}
        for e in cs.exponents:
            agg[e] = agg.get(e, 0) + 1
        assert cut_multiset(s, t) == agg


def test_cut_multiset_deep_threshold_big_counts():
    # 2^n words without enumerating them
    s = build_system(["1/2", "1/2"])
    agg = cut_multiset(s, ExpThreshold(F(40)))
    (point, count), = agg.items()
    level = point[0]
    assert level == math.ceil(40 / math.log(2) - 1e-9)
    assert count == 2 ** level


def test_a_k_band():
    # every cut point satisfies k <= b.alpha_real < k - log(rho_min)
    s = build_system(["1/2", "1/4"])
    alpha_real = s.basis.alpha_real()
    span = -math.log(float(min(s.ratios)))
    for k in (5, 10, 20, 40):
        pts = a_k_set(s, k)
        assert pts
        for b in pts:
            score = sum(a * x for a, x in zip(alpha_real, b))
            assert score >= k - 1e-9
            assert score < k + span + 1e-9


def test_threshold_tie_detected():
    # threshold k = exact score of a lattice point: 3 * log 2
    s = build_system(["1/2", "1/2"])
    k = F(3 * 693147180559945309, 10 ** 18)  # ~ 3 log 2, within 1e-12
    with pytest.raises(ThresholdTie):
        cut_multiset(s, ExpThreshold(k))


def test_common_basis_numeric():
    a = build_system(["1/2", "1/2"])
    b = build_system(["1/4", "1/4", "1/4", "1/4"])
    basis, a2, b2 = common_basis(a, b)
    assert basis.values == (F(1, 2),)
    assert a2.exponents == ((1,), (1,))
    assert b2.exponents == ((2,), (2,), (2,), (2,))
    assert a2.alpha == b2.alpha


def test_common_basis_symbolic_mismatch():
    a = build_system([Monomial.make({"u": 1}), Monomial.make({"u": 2})])
    b = build_system([Monomial.make({"v": 1}), Monomial.make({"v": 2})])
    with pytest.raises(IncompatibleSymbolicBases):
        common_basis(a, b)


def test_h_distance():
    a = build_system(["1/2", "1/2"])
    b = build_system(["1/4", "1/4", "1/4", "1/4"])
    _, a2, b2 = common_basis(a, b)
    d, sq = h_distance(a2, (1, 1), b2, (1,))
    assert sq == 0 and d == 0.0
    d, sq = h_distance(a2, (1,), b2, (1,))
    assert sq == 1
    c = build_system(["1/3", "1/3"])
    with pytest.raises(BasisMismatch):
        h_distance(a, (1,), c, (1,))


def test_matchable_equivalent_pair():
    a = build_system(["1/2", "1/2"])
    b = build_system(["1/4", "1/4", "1/4", "1/4"])
    rep = matchable_search(a, b, ExpThreshold(F(4)))
    assert rep.feasible
    assert rep.m0 <= 2
    assert rep.witness is not None
    # witness degrees within [1, m0] on both sides
    from collections import Counter

    left = Counter(w for w, _ in rep.witness)
    right = Counter(w for _, w in rep.witness)
    cs_a = cut_set(a, ExpThreshold(F(4)))
    cs_b = cut_set(b, ExpThreshold(F(4)))
    assert set(left) == set(cs_a.words)
    assert set(right) == set(cs_b.words)
    assert all(1 <= c <= rep.m0 for c in left.values())
    assert all(1 <= c <= rep.m0 for c in right.values())


def test_matchable_counting_obstruction():
    # (1/2,1/2) vs (1/8,1/8) at t=1/64: cut points coincide but the word
    # counts are 64 vs 4, so degrees force m0 >= 16
    a = build_system(["1/2", "1/2"])
    b = build_system(["1/8", "1/8"])
    t = F(1, 64)
    assert not matchable(a, b, t, 8).feasible
    rep = matchable(a, b, t, 16)
    assert rep.feasible


def test_matchable_infeasible_distance():
    # cut points 8 exponent levels apart: infeasible until m0 covers it
    a = build_system([Monomial.make({"l": 1}), Monomial.make({"l": 1})])
    b = build_system([Monomial.make({"l": 9}), Monomial.make({"l": 9})])
    assert not matchable(a, b, ExpThreshold(F(1)), 1).feasible
    rep = matchable_search(a, b, ExpThreshold(F(1)))
    assert rep.feasible
    assert rep.m0 == 8


def test_matchable_deep_aggregated_only():
    # 2^18-word cut-sets: group-level decision, no witness
    a = build_system(["1/2", "1/2"])
    b = build_system(["1/4", "1/4", "1/4", "1/4"])
    rep = matchable_search(a, b, ExpThreshold(F(12)))
    assert rep.feasible
    assert rep.witness is None
