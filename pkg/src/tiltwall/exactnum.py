"""Exact number types and small exact linear algebra.

Everything downstream computes over plain rationals (``fractions.Fraction``,
aliased ``Rat``), quadratic irrationals ``a + b*sqrt(D)`` in a single
extension (``QuadRat``), and rationals extended by ``+inf`` (``ExtRat``).
No floating point enters any verdict; floats appear only in SVG coordinate
rendering.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rat(text: str) -> Rat:
    """Parse the wire format 'p' or 'p/q' (base 10, ASCII). Rejects decimals."""
    t = text.strip()
    if not _RAT_RE.match(t):
        raise ValueError(f"not a rational in 'p' or 'p/q' form: {text!r}")
    return Fraction(t)


def format_rat(q: Rat | int) -> str:
    return str(Fraction(q))


def rat_sqrt(q: Rat | int) -> Rat | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def ceil_sqrt(q: Rat | int) -> int:
    """Least integer n >= 0 with n*n >= q. Exact."""
    q = Fraction(q)
    if q <= 0:
        return 0
    n = math.isqrt(q.numerator // q.denominator)
    while Fraction(n * n) < q:
        n += 1
    return n


class ExtRat:
    """A rational number or +infinity, totally ordered.

    Arithmetic involving the infinite value raises instead of propagating.
    Two infinite values compare equal (slope comparisons rely on this).
    """

    __slots__ = ("_v",)

    def __init__(self, value: Rat | int | None):
        self._v = None if value is None else Fraction(value)

    @staticmethod
    def finite(value: Rat | int) -> "ExtRat":
        return ExtRat(Fraction(value))

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> Rat:
        if self._v is None:
            raise ValueError("infinite value has no rational part")
        return self._v

    def _cmp_key(self, other):
        if isinstance(other, ExtRat):
            return other._v
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented

    def __eq__(self, other):
        k = self._cmp_key(other)
        if k is NotImplemented:
            return NotImplemented
        return self._v == k

    def __hash__(self):
        return hash(self._v)

    def __lt__(self, other):
        k = self._cmp_key(other)
        if k is NotImplemented:
            return NotImplemented
        if self._v is None:
            return False
        if k is None:
            return True
        return self._v < k

    def __le__(self, other):
        k = self._cmp_key(other)
        if k is NotImplemented:
            return NotImplemented
        return self == ExtRat(k) or self < ExtRat(k)

    def __gt__(self, other):
        k = self._cmp_key(other)
        if k is NotImplemented:
            return NotImplemented
        return ExtRat(k) < self

    def __ge__(self, other):
        k = self._cmp_key(other)
        if k is NotImplemented:
            return NotImplemented
        return ExtRat(k) <= self

    def _finite_pair(self, other) -> tuple[Fraction, Fraction]:
        if isinstance(other, (int, Fraction)):
            other = ExtRat(other)
        if not isinstance(other, ExtRat):
            raise TypeError(f"cannot combine ExtRat with {type(other).__name__}")
        if self._v is None or other._v is None:
            raise ValueError("arithmetic involving +inf is rejected")
        return self._v, other._v

    def __add__(self, other):
        a, b = self._finite_pair(other)
        return ExtRat(a + b)

    def __sub__(self, other):
        a, b = self._finite_pair(other)
        return ExtRat(a - b)

    def __mul__(self, other):
        a, b = self._finite_pair(other)
        return ExtRat(a * b)

    def __truediv__(self, other):
        a, b = self._finite_pair(other)
        return ExtRat(a / b)

    def __neg__(self):
        if self._v is None:
            raise ValueError("arithmetic involving +inf is rejected")
        return ExtRat(-self._v)

    def __repr__(self):
        return f"ExtRat({'inf' if self._v is None else self._v!r})"

    def __str__(self):
        return "inf" if self._v is None else str(self._v)


INFINITY = ExtRat(None)


class QuadRat:
    """Exact value a + b*sqrt(radicand) in a single real quadratic extension.

    radicand >= 0; a perfect-square radicand normalizes to b = 0. Arithmetic
    between two irrational values requires equal radicands. Comparison against
    rationals resolves the sign by exact case analysis, never by floats.
    """

    __slots__ = ("a", "b", "radicand")

    def __init__(self, a: Rat | int, b: Rat | int = 0, radicand: Rat | int = 0):
        a = Fraction(a)
        b = Fraction(b)
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if b == 0 or radicand == 0:
            b, radicand = Fraction(0), Fraction(0)
        else:
            s = rat_sqrt(radicand)
            if s is not None:
                a, b, radicand = a + b * s, Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, *_):
        raise AttributeError("QuadRat is immutable")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_rat(self) -> Rat:
        if self.b != 0:
            raise ValueError("irrational QuadRat has no rational value")
        return self.a

    @staticmethod
    def _coerce(x) -> "QuadRat":
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadRat(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as QuadRat")

    def _join(self, other: "QuadRat") -> Fraction:
        if self.b != 0 and other.b != 0 and self.radicand != other.radicand:
            raise ValueError(
                f"mixed radicands {self.radicand} and {other.radicand} are rejected"
            )
        return self.radicand if self.b != 0 else other.radicand

    def __add__(self, other):
        other = self._coerce(other)
        d = self._join(other)
        return QuadRat(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d = self._join(other)
        return QuadRat(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b, self.radicand)

    def norm(self) -> Rat:
        """a^2 - b^2 * radicand, the product with the conjugate."""
        return self.a * self.a - self.b * self.b * self.radicand

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.a == 0 and other.b == 0:
            raise ZeroDivisionError("QuadRat division by zero")
        d = self._join(other)
        n = other.norm()
        num = self * other.conjugate()
        return QuadRat(num.a / n, num.b / n, d)

    def sign(self) -> int:
        if self.b == 0:
            return -1 if self.a < 0 else (0 if self.a == 0 else 1)
        # a + b*sqrt(D) with D > 0 irrational, b != 0
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        diff = self.a * self.a - self.b * self.b * self.radicand
        if self.a > 0:  # b < 0: sign of |a| - |b|sqrt(D)
            return 1 if diff > 0 else -1  # diff == 0 impossible, D non-square
        return -1 if diff > 0 else 1

    def _cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.b != 0 and other.b != 0 and self.radicand != other.radicand:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.radicand))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        return f"QuadRat({self.a!r}, {self.b!r}, {self.radicand!r})"

    def __str__(self):
        return format_quadrat(self)


def format_quadrat(x: QuadRat) -> str:
    """Canonical form: 'a' when rational, else 'a + b*sqrt(D)' / 'a - b*sqrt(D)'."""
    if x.b == 0:
        return format_rat(x.a)
    sign = "+" if x.b > 0 else "-"
    return f"{format_rat(x.a)} {sign} {format_rat(abs(x.b))}*sqrt({format_rat(x.radicand)})"


_QUAD_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*"
    r"(?P<b>\d+(?:/\d+)?)\*sqrt\((?P<d>\d+(?:/\d+)?)\)$"
)


def parse_quadrat(text: str) -> QuadRat:
    """Inverse of format_quadrat."""
    t = text.strip()
    if _RAT_RE.match(t):
        return QuadRat(Fraction(t))
    m = _QUAD_RE.match(t)
    if not m:
        raise ValueError(f"not a QuadRat in canonical form: {text!r}")
    b = Fraction(m.group("b"))
    if m.group("sign") == "-":
        b = -b
    return QuadRat(Fraction(m.group("a")), b, Fraction(m.group("d")))


class RatMatrix:
    """Dense exact rational matrix with elimination-based queries.

    Determinants and leading principal minors use Bareiss one-step
    fraction-free elimination (all divisions exact); kernels come from the
    reduced row echelon form, so output bases are canonical and
    deterministic.
    """

    __slots__ = ("_e",)

    def __init__(self, entries: Iterable[Iterable[Rat | int]]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs positive dimensions")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "_e", rows)

    def __setattr__(self, *_):
        raise AttributeError("RatMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self._e)

    @property
    def cols(self) -> int:
        return len(self._e[0])

    def __getitem__(self, ij: tuple[int, int]) -> Rat:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[Rat, ...]:
        return self._e[i]

    def entries(self) -> tuple[tuple[Rat, ...], ...]:
        return self._e

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._e)
        return f"RatMatrix[{body}]"

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self._e)))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose()._e
        return RatMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self._e]
        )

    def mul_vec(self, v: Sequence[Rat | int]) -> tuple[Rat, ...]:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        vv = [Fraction(x) for x in v]
        return tuple(sum(a * b for a, b in zip(r, vv)) for r in self._e)

    def scale(self, k: Rat | int) -> "RatMatrix":
        k = Fraction(k)
        return RatMatrix([[k * x for x in r] for r in self._e])

    def add(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._e, other._e)
            ]
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def det(self) -> Rat:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = [list(r) for r in self._e]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
                a[i][k] = Fraction(0)
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def leading_principal_minors(self) -> list[Rat]:
        if self.rows != self.cols:
            raise ValueError("principal minors of non-square matrix")
        return [
            RatMatrix([r[: k + 1] for r in self._e[: k + 1]]).det()
            for k in range(self.rows)
        ]

    def _rref(self) -> tuple[list[list[Rat]], list[int]]:
        a = [list(r) for r in self._e]
        pivots: list[int] = []
        pr = 0
        for pc in range(self.cols):
            piv = next((i for i in range(pr, self.rows) if a[i][pc] != 0), None)
            if piv is None:
                continue
            a[pr], a[piv] = a[piv], a[pr]
            inv = 1 / a[pr][pc]
            a[pr] = [x * inv for x in a[pr]]
            for i in range(self.rows):
                if i != pr and a[i][pc] != 0:
                    f = a[i][pc]
                    a[i] = [x - f * y for x, y in zip(a[i], a[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self) -> list[tuple[Rat, ...]]:
        """Canonical basis of the right kernel (one vector per free column)."""
        a, pivots = self._rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for j in free:
            v = [Fraction(0)] * self.cols
            v[j] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -a[i][j]
            basis.append(tuple(v))
        return basis


def kernel_basis(m: RatMatrix) -> list[tuple[Rat, ...]]:
    """Canonical right-kernel basis of an exact rational matrix."""
    return m.kernel_basis()


def is_positive_definite(m: RatMatrix) -> bool:
    """Sylvester criterion by exact leading principal minors."""
    if not m.is_symmetric():
        raise ValueError("definiteness test requires a symmetric matrix")
    return all(minor > 0 for minor in m.leading_principal_minors())
