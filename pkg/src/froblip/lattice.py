"""Exact exponent-vector coordinates for multiplicative groups of ratios.

A ratio in (0,1) is represented as an integer exponent vector over a
pseudo-basis: a tuple of values in (0,1) (exact rationals, or formal named
generators for symbolic systems) such that every ratio is a monomial in the
basis.  All linear algebra here is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import sympy

from .errors import DimensionMismatch, FroblipError, ParseError

Vec = tuple  # tuple of ints


@dataclass(frozen=True)
class Monomial:
    """Formal product of named generators with integer exponents.

    ``powers`` is sorted by generator name; zero exponents are dropped.
    """

    powers: tuple

    @staticmethod
    def make(powers: dict) -> "Monomial":
        items = tuple(sorted((g, int(e)) for g, e in powers.items() if e != 0))
        return Monomial(items)

    @staticmethod
    def generator(name: str) -> "Monomial":
        return Monomial(((name, 1),))

    @property
    def generators(self) -> tuple:
        return tuple(g for g, _ in self.powers)

    def as_dict(self) -> dict:
        return dict(self.powers)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for g, e in other.powers:
            d[g] = d.get(g, 0) + e
        return Monomial.make(d)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial.make({g: e * k for g, e in self.powers})

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"{g}^{e}" if e != 1 else g for g, e in self.powers)


RatioValue = Union[Fraction, Monomial]


@dataclass(frozen=True)
class PseudoBasis:
    """Ordered basis values; each numeric value must lie in (0,1)."""

    values: tuple

    def __post_init__(self):
        if not self.values:
            raise FroblipError("empty pseudo-basis")
        for v in self.values:
            if isinstance(v, Fraction) and not (0 < v < 1):
                raise FroblipError(f"basis value {v} outside (0,1)")

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def is_numeric(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    def eval_exact(self, x: Sequence[int]) -> Fraction:
        """Evaluate basis**x as an exact rational (numeric basis only)."""
        if not self.is_numeric:
            raise FroblipError("symbolic basis has no exact rational value")
        r = Fraction(1)
        for v, e in zip(self.values, x):
            r *= v ** e
        return r

    def eval_monomial(self, x: Sequence[int]) -> Monomial:
        """Evaluate basis**x as a formal monomial (symbolic basis only)."""
        m = Monomial(())
        for v, e in zip(self.values, x):
            if not isinstance(v, Monomial):
                raise FroblipError("eval_monomial requires a symbolic basis")
            m = m * (v ** e)
        return m

    def alpha_real(self) -> tuple:
        """The canonical real half-space functional -(log b_1,...,log b_s)."""
        import math

        if not self.is_numeric:
            raise FroblipError("symbolic basis has no numeric log values")
        return tuple(-math.log(v) for v in self.values)


def parse_rational(text: str) -> Fraction:
    """Parse an exact "p/q" ratio string; must lie in (0,1)."""
    try:
        r = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None
    if not (0 < r < 1):
        raise ParseError(f"ratio {text!r} outside (0,1)")
    return r


def factor_rationals(ratios: Sequence[Fraction]):
    """Factor exact rational ratios over the reciprocal-prime basis.

    Returns ``(PseudoBasis, vectors)`` with basis (1/p_1,...,1/p_s) over the
    ascending primes dividing any numerator or denominator, and for each
    ratio its exponent vector x with ratio == basis**x exactly.  The
    exponent at prime p is -v_p(ratio), so coordinates may be negative.
    """
    ratios = [Fraction(r) for r in ratios]
    for r in ratios:
        if not (0 < r < 1):
            raise FroblipError(f"ratio {r} outside (0,1)")
    factorizations = []
    primes = set()
    for r in ratios:
        f = sympy.factorrat(sympy.Rational(r.numerator, r.denominator))
        f = {int(p): int(e) for p, e in f.items()}
        primes.update(f)
        factorizations.append(f)
    plist = sorted(primes)
    basis = PseudoBasis(tuple(Fraction(1, p) for p in plist))
    vectors = [tuple(-f.get(p, 0) for p in plist) for f in factorizations]
    return basis, vectors


def _check_common_dim(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        raise FroblipError("empty vector list")
    s = len(vectors[0])
    for v in vectors:
        if len(v) != s:
            raise DimensionMismatch("exponent vectors of different lengths")
    return s


def row_hnf(vectors: Sequence[Sequence[int]]):
    """Row-style Hermite normal form with positive pivots.

    Returns the list of nonzero rows (exact integer arithmetic); the rows
    span the same lattice as the input rows.
    """
    _check_common_dim(vectors)
    A = [list(map(int, v)) for v in vectors]
    m = len(A)
    n = len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            while A[i][c] != 0:
                q = A[r][c] // A[i][c]
                A[r] = [a - q * b for a, b in zip(A[r], A[i])]
                A[r], A[i] = A[i], A[r]
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return [tuple(row) for row in A[:r]]


def integer_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of the integer matrix whose rows are the vectors, exactly."""
    return len(row_hnf(vectors))


def express_over_hnf(hnf_rows, x):
    """Write lattice vector x as an integer combination of HNF rows.

    Raises if x is not in the row lattice.
    """
    n = len(x)
    pivots = []
    for row in hnf_rows:
        c = next(i for i in range(n) if row[i] != 0)
        pivots.append(c)
    rem = list(map(int, x))
    coeffs = []
    for row, c in zip(hnf_rows, pivots):
        q, mod = divmod(rem[c], row[c])
        if mod != 0:
            raise FroblipError(f"{tuple(x)} not in the row lattice")
        coeffs.append(q)
        rem = [a - q * b for a, b in zip(rem, row)]
    if any(rem):
        raise FroblipError(f"{tuple(x)} not in the row lattice")
    return tuple(coeffs)


def reduce_to_pseudo_basis(basis: PseudoBasis, vectors: Sequence[Sequence[int]]):
    """Shrink an oversized basis to the exact rank of the exponent group.

    If rank r < s, the new basis elements are monomials in the old basis
    taken from the row HNF of the exponent matrix, and the vectors are
    re-expressed over them.  Numeric basis values outside (0,1) are replaced
    by their reciprocals (negating the matching coordinate).  If r == s the
    input is returned unchanged.
    """
    s = _check_common_dim(vectors)
    if s != basis.size:
        raise DimensionMismatch("vectors do not match basis size")
    H = row_hnf(vectors)
    r = len(H)
    if r == 0:
        raise FroblipError("rank 0: all exponent vectors are zero")
    if r == s:
        return basis, [tuple(map(int, v)) for v in vectors]
    coords = [express_over_hnf(H, v) for v in vectors]
    new_values = []
    flips = []
    for i, row in enumerate(H):
        if basis.is_numeric:
            val = basis.eval_exact(row)
            if val == 1:
                raise FroblipError("degenerate basis candidate with value 1")
            if val > 1:
                val = 1 / val
                flips.append(i)
            new_values.append(val)
        else:
            new_values.append(basis.eval_monomial(row))
    if flips:
        coords = [
            tuple(-x if i in flips else x for i, x in enumerate(v)) for v in coords
        ]
    return PseudoBasis(tuple(new_values)), coords
