"""The ruled threefold X = P(E) -> C and its numerical intersection ring.

The numerical classes are generated by the relative hyperplane class H and
the fiber class F with relations F^2 = 0, H^2 F = point, H^3 = degree * point.
A Chern character is stored through the six lattice coordinates

    (ch0, HF.ch1, H^2.ch1, F.ch2, H.ch2, ch3)

in this order. Lattice points have integer first three entries, half-integer
F.ch2 and H.ch2, and sixth-integer ch3, but the coordinates themselves are
arbitrary exact rationals so that twists by rational divisor classes stay
inside the type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, format_rat, parse_rat


@dataclass(frozen=True)
class RuledThreefold:
    """P(E) over a curve of genus `genus` with H^3 = deg E = `degree`."""

    genus: int
    degree: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool):
            raise ValueError("genus must be an integer")
        if not isinstance(self.degree, int) or isinstance(self.degree, bool):
            raise ValueError("degree must be an integer")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


@dataclass(frozen=True)
class CharVector:
    """Point of the rank-6 numerical Chern lattice, coordinates (r, cHF, cHH, dF, dH, e)."""

    r: Rat
    cHF: Rat
    cHH: Rat
    dF: Rat
    dH: Rat
    e: Rat

    def __post_init__(self):
        for name in ("r", "cHF", "cHH", "dF", "dH", "e"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_tuple(self) -> tuple[Rat, Rat, Rat, Rat, Rat, Rat]:
        return (self.r, self.cHF, self.cHH, self.dF, self.dH, self.e)

    def is_lattice(self) -> bool:
        """Integrality pattern Z, Z, Z, Z/2, Z/2, Z/6."""
        return (
            self.r.denominator == 1
            and self.cHF.denominator == 1
            and self.cHH.denominator == 1
            and (2 * self.dF).denominator == 1
            and (2 * self.dH).denominator == 1
            and (6 * self.e).denominator == 1
        )

    def __add__(self, other: "CharVector") -> "CharVector":
        return CharVector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: "CharVector") -> "CharVector":
        return CharVector(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __neg__(self) -> "CharVector":
        return CharVector(*(-a for a in self.as_tuple()))

    def scale(self, k: Rat | int) -> "CharVector":
        k = Fraction(k)
        return CharVector(*(k * a for a in self.as_tuple()))


CHAR_O = CharVector(1, 0, 0, 0, 0, 0)
SKYSCRAPER = CharVector(0, 0, 0, 0, 0, 1)


def parse_char(text: str) -> CharVector:
    parts = text.split(",")
    if len(parts) != 6:
        raise ValueError(f"character needs 6 comma-separated entries, got {len(parts)}")
    return CharVector(*(parse_rat(p) for p in parts))


def format_char(ch: CharVector) -> str:
    return ",".join(format_rat(x) for x in ch.as_tuple())


def validate_lattice_char(ch: CharVector) -> CharVector:
    """Enforce the integrality pattern, with a field-by-field error message."""
    checks = [
        ("r", ch.r, 1, "an integer"),
        ("cHF", ch.cHF, 1, "an integer"),
        ("cHH", ch.cHH, 1, "an integer"),
        ("dF", ch.dF, 2, "a half-integer"),
        ("dH", ch.dH, 2, "a half-integer"),
        ("e", ch.e, 6, "a sixth-integer"),
    ]
    for name, value, mult, kind in checks:
        if (mult * value).denominator != 1:
            raise ValueError(f"entry {name} = {value} must be {kind}")
    return ch


def canonical_and_c2(X: RuledThreefold) -> tuple[tuple[int, int], int, int]:
    """Canonical class (coefficients of H, F) and the pairings c2.H, c2.F."""
    g, d = X.genus, X.degree
    k = (-3, 2 * g - 2 + d)
    c2H = d - 6 * g + 6
    c2F = 3
    return k, c2H, c2F


def line_bundle_char(a: int, b: int, X: RuledThreefold) -> CharVector:
    """Character of O(aH + bF), the exponential of the divisor class."""
    d = X.degree
    return CharVector(
        1,
        a,
        a * d + b,
        Fraction(a * a, 2),
        Fraction(a * a * d, 2) + a * b,
        Fraction(a**3 * d, 6) + Fraction(a * a * b, 2),
    )


def _hf_basis(ch: CharVector, d: int):
    """Coefficients (p, q, x, y) with ch1 = pH + qF and ch2 = xH^2 + yHF."""
    p = ch.cHF
    q = ch.cHH - p * d
    x = ch.dF
    y = ch.dH - x * d
    return p, q, x, y


def tensor_product_char(A: CharVector, B: CharVector, X: RuledThreefold) -> CharVector:
    """Product of characters in the numerical ring, truncated above degree 3."""
    d = X.degree
    pa, qa, xa, ya = _hf_basis(A, d)
    pb, qb, xb, yb = _hf_basis(B, d)
    r = A.r * B.r
    p = A.r * pb + B.r * pa
    q = A.r * qb + B.r * qa
    x = A.r * xb + B.r * xa + pa * pb
    y = A.r * yb + B.r * ya + pa * qb + qa * pb
    e = (
        A.r * B.e
        + B.r * A.e
        + pa * xb * d + pa * yb + qa * xb
        + pb * xa * d + pb * ya + qb * xa
    )
    return CharVector(r, p, p * d + q, x, x * d + y, e)


def dual_char(A: CharVector) -> CharVector:
    """Character of the derived dual: signs alternate with cohomological degree."""
    return CharVector(A.r, -A.cHF, -A.cHH, A.dF, A.dH, -A.e)


def fiber_pushforward_char(k: int, A: CharVector) -> CharVector:
    """Character of the pushforward from k fibers: multiply by kF, degrees shift up."""
    if not isinstance(k, int) or k <= 0:
        raise ValueError("k must be a positive integer")
    return CharVector(0, 0, k * A.r, 0, k * A.cHF, k * A.dF)


def euler_char(X: RuledThreefold, ch: CharVector) -> Rat:
    """Euler characteristic by Riemann-Roch, expanded through the ring relations."""
    g, d = X.genus, X.degree
    c1_ch2 = 3 * ch.dH - (d + 2 * g - 2) * ch.dF
    c1sq_c2_ch1 = 12 * ch.cHH - (18 * g - 18 + 8 * d) * ch.cHF
    return ch.e + c1_ch2 / 2 + c1sq_c2_ch1 / 12 + ch.r * (1 - g)


def euler_char_pair(X: RuledThreefold, A: CharVector, B: CharVector) -> Rat:
    """chi(A, B) through the dual-tensor character."""
    return euler_char(X, tensor_product_char(dual_char(A), B, X))
