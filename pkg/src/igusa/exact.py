"""Exact arithmetic kernels: rationals, the conductor-24 cyclotomic field,
truncated q-series with quarter-integer exponents, and exact matrices over
the cyclotomic field with eigenphase extraction for finite-order matrices.

Everything here is immutable and pure; nothing uses floating point except
the explicit complex embeddings used by numeric cross-checks.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Fraction

Scalar = Union[int, Fraction, "Cyclotomic"]

# Power basis 1, z, ..., z^7 of Q(z), z a primitive 24th root of unity,
# reduced modulo the 24th cyclotomic polynomial x^8 - x^4 + 1.
_DEGREE = 8
_CONDUCTOR = 24


def _zeta_power_table() -> list[tuple[int, ...]]:
    # integer coefficient vectors of z^k for k = 0..23; x^8 = x^4 - 1
    table: list[list[int]] = [[0] * _DEGREE for _ in range(_CONDUCTOR)]
    table[0][0] = 1
    for k in range(1, _CONDUCTOR):
        prev = table[k - 1]
        cur = [0] * (_DEGREE + 1)
        for idx in range(_DEGREE):
            cur[idx + 1] = prev[idx]
        if cur[_DEGREE]:
            c = cur[_DEGREE]
            cur[_DEGREE] = 0
            cur[4] += c
            cur[0] -= c
        table[k] = cur[:_DEGREE]
    return [tuple(row) for row in table]


_ZPOW = _zeta_power_table()
# z^(i+j) for i, j < 8 never exceeds exponent 14
_PRODUCT_BASIS = [_ZPOW[k] for k in range(15)]
# complex conjugation z^k -> z^(24-k) as integer basis images
_CONJ_BASIS = [_ZPOW[0]] + [_ZPOW[_CONDUCTOR - k] for k in range(1, _DEGREE)]
_ZETA_COMPLEX = [cmath.exp(2j * cmath.pi * k / _CONDUCTOR) for k in range(_CONDUCTOR)]


class Cyclotomic:
    """An element of the degree-8 field generated by a primitive 24th root of
    unity, stored as 8 rational coordinates in the power basis.

    The imaginary unit is ``Cyclotomic.root(6)``; every 8th and 12th root of
    unity is representable. Larger conductors are rejected at construction.
    """

    __slots__ = ("_c",)

    def __init__(self, value: Union[int, Fraction, Sequence[Fraction]] = 0):
        if isinstance(value, (int, Fraction)):
            c = [Fraction(value)] + [Fraction(0)] * (_DEGREE - 1)
        else:
            c = [Fraction(v) for v in value]
            if len(c) != _DEGREE:
                raise ValueError(f"need {_DEGREE} coordinates, got {len(c)}")
        self._c = tuple(c)

    @classmethod
    def root(cls, k: int) -> "Cyclotomic":
        """zeta^k for the fixed primitive 24th root of unity zeta."""
        return cls(_ZPOW[k % _CONDUCTOR])

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "Cyclotomic":
        """e^(2 pi i power/order); requires order dividing 24."""
        if order <= 0 or _CONDUCTOR % order != 0:
            raise ValueError(f"order {order} does not divide {_CONDUCTOR}")
        return cls.root((_CONDUCTOR // order) * power)

    @classmethod
    def e(cls, t: Fraction) -> "Cyclotomic":
        """e^(2 pi i t) for rational t with 24t integral."""
        t = Fraction(t)
        k = t * _CONDUCTOR
        if k.denominator != 1:
            raise ValueError(f"e^(2 pi i {t}) is outside the conductor-24 field")
        return cls.root(int(k))

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> "Cyclotomic":
        return cls(value)

    @staticmethod
    def coerce(value: "Scalar") -> "Cyclotomic":
        out = _coerce(value)
        if out is None:
            raise TypeError(f"cannot coerce {value!r} to Cyclotomic")
        return out

    @classmethod
    def e_half(cls, q: Fraction) -> "Cyclotomic":
        """e^(pi i q) for rational q with 12q integral."""
        return cls.e(Fraction(q) / 2)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __bool__(self) -> bool:
        return any(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclotomic):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c[0] == other and not any(self._c[1:])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic([-v for v in self._c])

    def __add__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic([a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic([a - b for a, b in zip(self._c, other._c)])

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = [Fraction(0)] * _DEGREE
        for i, a in enumerate(self._c):
            if not a:
                continue
            for j, b in enumerate(other._c):
                if not b:
                    continue
                ab = a * b
                basis = _PRODUCT_BASIS[i + j]
                for k in range(_DEGREE):
                    if basis[k]:
                        acc[k] += ab * basis[k]
        return Cyclotomic(acc)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("cyclotomic inverse of zero")
        # solve (multiplication-by-self) v = 1 over the rationals
        cols = [(self * Cyclotomic.root(j))._c for j in range(_DEGREE)]
        aug = [[cols[j][i] for j in range(_DEGREE)] + [Fraction(int(i == 0))]
               for i in range(_DEGREE)]
        n = _DEGREE
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return Cyclotomic([aug[i][n] for i in range(n)])

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "Cyclotomic":
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, the field automorphism zeta -> zeta^-1."""
        acc = [Fraction(0)] * _DEGREE
        for k, a in enumerate(self._c):
            if not a:
                continue
            basis = _CONJ_BASIS[k]
            for j in range(_DEGREE):
                if basis[j]:
                    acc[j] += a * basis[j]
        return Cyclotomic(acc)

    @property
    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self._c[0]

    def to_complex(self) -> complex:
        return sum(float(a) * _ZETA_COMPLEX[k] for k, a in enumerate(self._c) if a)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"Cyc({self._c[0]})"
        parts = [f"{a}*z^{k}" if k else f"{a}" for k, a in enumerate(self._c) if a]
        return "Cyc(" + " + ".join(parts) + ")"


def _coerce(value: Scalar) -> Union[Cyclotomic, None]:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic(value)
    return None


CYC_ZERO = Cyclotomic(0)
CYC_ONE = Cyclotomic(1)
CYC_I = Cyclotomic.root(6)


def cyclotomic_root(k: int) -> Cyclotomic:
    """zeta^k in canonical form; cyclotomic_root(6) squares to -1."""
    return Cyclotomic.root(k)


_EXP_DEN = 4  # q-series exponents live in (1/4)Z


class QSeries:
    """Truncated series in q with exponents in (1/4)Z and cyclotomic
    coefficients. Exponents >= truncation are unknown, not zero."""

    __slots__ = ("terms", "truncation")

    def __init__(self, terms, truncation):
        self.truncation = Fraction(truncation)
        clean: dict[Fraction, Cyclotomic] = {}
        for expo, coeff in (terms.items() if isinstance(terms, dict) else terms):
            expo = Fraction(expo)
            if _EXP_DEN % expo.denominator != 0:
                raise ValueError(f"exponent {expo} not in (1/{_EXP_DEN})Z")
            if expo >= self.truncation:
                continue
            coeff = coeff if isinstance(coeff, Cyclotomic) else Cyclotomic(coeff)
            if coeff:
                clean[expo] = clean.get(expo, CYC_ZERO) + coeff
                if not clean[expo]:
                    del clean[expo]
        self.terms = clean

    @classmethod
    def zero(cls, truncation) -> "QSeries":
        return cls({}, truncation)

    @classmethod
    def one(cls, truncation) -> "QSeries":
        return cls({Fraction(0): CYC_ONE}, truncation)

    @classmethod
    def monomial(cls, exponent, coeff=1, truncation=None) -> "QSeries":
        if truncation is None:
            raise ValueError("monomial needs an explicit truncation")
        return cls({Fraction(exponent): coeff}, truncation)

    def coefficient(self, exponent) -> Cyclotomic:
        expo = Fraction(exponent)
        if expo >= self.truncation:
            raise ValueError(f"coefficient at {expo} is beyond truncation {self.truncation}")
        return self.terms.get(expo, CYC_ZERO)

    @property
    def leading_exponent(self) -> Fraction:
        # for an all-zero prefix the first unknown exponent is the truncation
        return min(self.terms) if self.terms else self.truncation

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.terms == other.terms and self.truncation == other.truncation

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.truncation))

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.terms.items()}, self.truncation)

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.truncation, other.truncation)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, CYC_ZERO) + c
        return QSeries(acc, trunc)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, factor: Scalar) -> "QSeries":
        factor = _coerce(factor)
        return QSeries({e: c * factor for e, c in self.terms.items()}, self.truncation)

    def shift(self, exponent) -> "QSeries":
        """Multiply by the monomial q^exponent."""
        s = Fraction(exponent)
        return QSeries({e + s: c for e, c in self.terms.items()}, self.truncation + s)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            factor = _coerce(other)
            if factor is None:
                return NotImplemented
            return self.scale(factor)
        trunc = min(self.truncation + other.leading_exponent,
                    other.truncation + self.leading_exponent)
        acc: dict[Fraction, Cyclotomic] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                if e >= trunc:
                    continue
                acc[e] = acc.get(e, CYC_ZERO) + ca * cb
        return QSeries(acc, trunc)

    def __rmul__(self, other) -> "QSeries":
        factor = _coerce(other)
        if factor is None:
            return NotImplemented
        return self.scale(factor)

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer powers only")
        out = QSeries.one(self.truncation) if n == 0 else None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out if out is not None else QSeries.one(self.truncation)

    def evaluate(self, q_quarter: complex) -> complex:
        """Numeric value with q^(1/4) = q_quarter; used only by oracles."""
        return sum(c.to_complex() * q_quarter ** int(e * 4) for e, c in self.terms.items())

    def __repr__(self) -> str:
        body = " + ".join(f"({c!r})q^{e}" for e, c in sorted(self.terms.items()))
        return f"QSeries({body or '0'}; O(q^{self.truncation}))"


def qseries_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the minimum induced truncation order."""
    return a * b


class CycMatrix:
    """Exact matrix over the conductor-24 field, packed as an integer
    component array with a single positive denominator.

    num has shape (n, n, 8); entry (i, j) is sum_k num[i,j,k] zeta^k / den.
    """

    __slots__ = ("num", "den", "n")

    def __init__(self, num: np.ndarray, den: int = 1, _normalize: bool = True):
        num = np.asarray(num, dtype=np.int64)
        if num.ndim != 3 or num.shape[0] != num.shape[1] or num.shape[2] != _DEGREE:
            raise ValueError(f"bad packed shape {num.shape}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if _normalize:
            g = math.gcd(int(np.gcd.reduce(np.abs(num), axis=None)), den)
            if g > 1:
                num = num // g
                den //= g
        self.num = num
        self.num.setflags(write=False)
        self.den = den
        self.n = num.shape[0]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "CycMatrix":
        n = len(rows)
        den = 1
        entries = [[_coerce(v) for v in row] for row in rows]
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for v in row:
                for c in v.coefficients:
                    den = den * c.denominator // math.gcd(den, c.denominator)
        num = np.zeros((n, n, _DEGREE), dtype=np.int64)
        for i, row in enumerate(entries):
            for j, v in enumerate(row):
                for k, c in enumerate(v.coefficients):
                    num[i, j, k] = c.numerator * (den // c.denominator)
        return cls(num, den)

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        num = np.zeros((n, n, _DEGREE), dtype=np.int64)
        num[np.arange(n), np.arange(n), 0] = 1
        return cls(num, 1, _normalize=False)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "CycMatrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_rows(rows)

    def entry(self, i: int, j: int) -> Cyclotomic:
        return Cyclotomic([Fraction(int(v), self.den) for v in self.num[i, j]])

    def rows(self) -> list[list[Cyclotomic]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.den == other.den and np.array_equal(self.num, other.num)

    def __hash__(self) -> int:
        return hash((self.den, self.num.tobytes()))

    def key(self) -> bytes:
        return self.den.to_bytes(8, "little") + self.num.tobytes()

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(-self.num, self.den, _normalize=False)

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        if not isinstance(other, CycMatrix):
            return NotImplemented
        den = self.den * other.den // math.gcd(self.den, other.den)
        return CycMatrix(self.num * (den // self.den) + other.num * (den // other.den), den)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return self + (-other)

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = np.zeros((self.n, self.n, _DEGREE), dtype=np.int64)
        for c in range(_DEGREE):
            ac = self.num[:, :, c]
            if not ac.any():
                continue
            for d in range(_DEGREE):
                bd = other.num[:, :, d]
                if not bd.any():
                    continue
                prod = ac @ bd
                for k, coeff in enumerate(_PRODUCT_BASIS[c + d]):
                    if coeff:
                        out[:, :, k] += coeff * prod
        return CycMatrix(out, self.den * other.den)

    def scale(self, factor: Scalar) -> "CycMatrix":
        factor = _coerce(factor)
        fden = 1
        for c in factor.coefficients:
            fden = fden * c.denominator // math.gcd(fden, c.denominator)
        fnum = [int(c.numerator * (fden // c.denominator)) for c in factor.coefficients]
        out = np.zeros_like(self.num)
        for c, fc in enumerate(fnum):
            if not fc:
                continue
            for d in range(_DEGREE):
                comp = self.num[:, :, d]
                if not comp.any():
                    continue
                prod = fc * comp
                for k, coeff in enumerate(_PRODUCT_BASIS[c + d]):
                    if coeff:
                        out[:, :, k] += coeff * prod
        return CycMatrix(out, self.den * fden)

    def __pow__(self, k: int) -> "CycMatrix":
        if not isinstance(k, int) or k < 0:
            raise ValueError("nonnegative integer powers only")
        out = CycMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return out

    def trace(self) -> Cyclotomic:
        diag = self.num[np.arange(self.n), np.arange(self.n)].sum(axis=0)
        return Cyclotomic([Fraction(int(v), self.den) for v in diag])

    def conjugate(self) -> "CycMatrix":
        conj = np.array(_CONJ_BASIS, dtype=np.int64)  # row k = image of zeta^k
        return CycMatrix(np.tensordot(self.num, conj, axes=([2], [0])), self.den)

    def is_identity(self) -> bool:
        return self == CycMatrix.identity(self.n)

    def order(self, max_order: int = _CONDUCTOR) -> Union[int, None]:
        power = self
        for t in range(1, max_order + 1):
            if power.is_identity():
                return t
            power = power @ self
        return None

    def apply(self, vec: Sequence[Scalar]) -> list[Cyclotomic]:
        vals = [_coerce(v) for v in vec]
        return [sum((self.entry(i, j) * vals[j] for j in range(self.n) if vals[j]),
                    CYC_ZERO) for i in range(self.n)]


def matrix_eigenphase_multiplicities(a: CycMatrix) -> list[tuple[Fraction, int]]:
    """Eigenvalue phases of a finite-order exact matrix.

    Finds the order n <= 24 by repeated multiplication, then recovers the
    multiplicity of e^(2 pi i j/n) exactly as (1/n) sum_t zeta_n^(-jt) tr(A^t).
    """
    n = a.order()
    if n is None or _CONDUCTOR % n != 0:
        raise ValueError("matrix has no usable finite order <= 24")
    traces = []
    power = CycMatrix.identity(a.n)
    for _ in range(n):
        traces.append(power.trace())
        power = power @ a
    out = []
    total = 0
    for j in range(n):
        s = CYC_ZERO
        for t in range(n):
            s = s + Cyclotomic.root((-(_CONDUCTOR // n) * j * t) % _CONDUCTOR) * traces[t]
        mult = (s / n).as_rational()
        if mult.denominator != 1 or mult < 0:
            raise ValueError(f"non-integer multiplicity {mult} at phase {j}/{n}")
        if mult:
            out.append((Fraction(j, n), int(mult)))
            total += int(mult)
    if total != a.n:
        raise ValueError("eigenphase multiplicities do not sum to the dimension")
    return out


def eigenphase_sum(a: CycMatrix) -> Fraction:
    """Sum of eigenvalue phases in [0, 1), exact."""
    return sum((Fraction(phase) * mult for phase, mult in
                matrix_eigenphase_multiplicities(a)), Fraction(0))


def field_rref(rows: list[list], width: int = None):
    """Reduced row echelon form over an exact field (Fraction or Cyclotomic
    entries). Returns (reduced rows, pivot column indices). Input unchanged.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    w = width if width is not None else len(mat[0])
    pivots = []
    r = 0
    for col in range(w):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = (1 / mat[r][col]) if isinstance(mat[r][col], Fraction) else mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [v - f * w2 for v, w2 in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def matrix_rank(rows: list[list]) -> int:
    return len(field_rref(rows)[1])


def nullspace(rows: list[list], width: int):
    """Basis of the right kernel of the matrix with the given row list."""
    red, pivots = field_rref(rows, width)
    zero = Fraction(0)
    one = Fraction(1)
    if red and isinstance(red[0][0], Cyclotomic):
        zero, one = CYC_ZERO, CYC_ONE
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * width
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis
