"""Support-property machinery for the central charge on the rank-6 lattice.

The candidate quadratic forms are the two-parameter family

    Q = mu * Q_weak(alpha^2, beta) + lambda * Q_disc

where Q_weak polarizes the weak inequality defect b*c - a*d and Q_disc the
first discriminant. A witness must be negative definite on ker Z (exact
Sylvester minors on the restricted Gram matrix) and nonnegative on the
equality-case fixture classes. Failure to find a witness in a finite grid is
reported as inconclusive, never as a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chern import TiltPoint
from .exactnum import Rat, RatMatrix, is_positive_definite
from .geometry import (
    CharVector,
    RuledThreefold,
    fiber_pushforward_char,
    line_bundle_char,
)
from .parallel import pmap
from .stability import ChargeParams

_COORDS = ("r", "cHF", "cHH", "dF", "dH", "e")


@dataclass(frozen=True)
class QForm6:
    """Symmetric rational quadratic form on the six lattice coordinates."""

    matrix: RatMatrix

    def __post_init__(self):
        if self.matrix.rows != 6 or self.matrix.cols != 6:
            raise ValueError("QForm6 needs a 6x6 matrix")
        if not self.matrix.is_symmetric():
            raise ValueError("QForm6 needs a symmetric matrix")

    def value(self, v: Sequence[Rat | int]) -> Rat:
        vv = [Fraction(x) for x in v]
        return sum(
            vv[i] * self.matrix[i, j] * vv[j] for i in range(6) for j in range(6)
        )

    def value_char(self, ch: CharVector) -> Rat:
        return self.value(ch.as_tuple())

    def add(self, other: "QForm6") -> "QForm6":
        return QForm6(self.matrix.add(other.matrix))

    def scale(self, k: Rat | int) -> "QForm6":
        return QForm6(self.matrix.scale(k))

    def upper_entries(self) -> list[tuple[str, str, Rat]]:
        """The 21 independent entries, row-major upper triangle."""
        return [
            (_COORDS[i], _COORDS[j], self.matrix[i, j])
            for i in range(6)
            for j in range(i, 6)
        ]


@dataclass(frozen=True)
class ChargeFunctionals:
    """Real and imaginary parts of the charge as linear functionals."""

    re_coeffs: tuple[Rat, ...]
    im_coeffs: tuple[Rat, ...]

    def matrix(self) -> RatMatrix:
        return RatMatrix([self.re_coeffs, self.im_coeffs])

    def evaluate(self, v: Sequence[Rat | int]) -> tuple[Rat, Rat]:
        vv = [Fraction(x) for x in v]
        return (
            sum(a * x for a, x in zip(self.re_coeffs, vv)),
            sum(a * x for a, x in zip(self.im_coeffs, vv)),
        )


def charge_functionals(p: ChargeParams, X: RuledThreefold) -> ChargeFunctionals:
    """Expand the twisted degrees of the charge into untwisted coordinates."""
    a2, b, s, t, d = p.alpha2, p.beta, p.s, p.t, Fraction(X.degree)
    re = (
        -b * s + b**3 * d / 6 - a2 * b * d / 4,
        s - a2 * d / 4,
        (a2 - b * b) / 2,
        Fraction(0),
        b,
        Fraction(-1),
    )
    im = (
        b * b / 2 * d + t / 2 * (b * b - a2),
        -t * b,
        -b,
        t,
        Fraction(1),
        Fraction(0),
    )
    return ChargeFunctionals(re, im)


def _functional_coeffs_abcd(pt: TiltPoint, d: Fraction):
    """Coefficient vectors of the four weak-inequality functionals."""
    a2, b = pt.alpha2, pt.beta
    fa = (a2 / 2 - b * b / 2, b, Fraction(0), Fraction(-1), Fraction(0), Fraction(0))
    fb = (
        b**3 * d / 6 - a2 * b * d / 4,
        -a2 * d / 4,
        (a2 - b * b) / 2,
        Fraction(0),
        b,
        Fraction(-1),
    )
    fc = (-b, Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    fd = (b * b / 2 * d, Fraction(0), -b, Fraction(0), Fraction(1), Fraction(0))
    return fa, fb, fc, fd


def _sym_outer(x: Sequence[Fraction], y: Sequence[Fraction]) -> RatMatrix:
    return RatMatrix(
        [
            [(x[i] * y[j] + x[j] * y[i]) / 2 for j in range(6)]
            for i in range(6)
        ]
    )


def bg_quadratic_form(pt: TiltPoint, X: RuledThreefold) -> QForm6:
    """Polarization of b*c - a*d; evaluates to the weak inequality defect."""
    fa, fb, fc, fd = _functional_coeffs_abcd(pt, Fraction(X.degree))
    m = _sym_outer(fb, fc).add(_sym_outer(fa, fd).scale(-1))
    return QForm6(m)


def disc_bar_form() -> QForm6:
    """Polarization of cHF^2 - 2 r dF."""
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    rows[1][1] = Fraction(1)
    rows[0][3] = rows[3][0] = Fraction(-1)
    return QForm6(RatMatrix(rows))


def is_negative_definite_on(Q: QForm6, basis: Sequence[Sequence[Rat | int]]) -> bool:
    """Restrict to the span of `basis` and test definiteness of the negation."""
    if not basis:
        raise ValueError("empty basis")
    b = RatMatrix([[Fraction(x) for x in v] for v in basis]).transpose()
    if b.rows != 6:
        raise ValueError("basis vectors must have 6 coordinates")
    if b.rank() != b.cols:
        raise ValueError("basis vectors must be linearly independent")
    gram = b.transpose() @ Q.matrix @ b
    return is_positive_definite(gram.scale(-1))


def equality_case_fixtures(X: RuledThreefold) -> list[CharVector]:
    """Classes carrying semistable objects with vanishing discriminant:
    line bundles and their fiber pushforwards."""
    fixtures = []
    for a in range(-3, 4):
        for b in range(-3, 4):
            lb = line_bundle_char(a, b, X)
            fixtures.append(lb)
            fixtures.append(fiber_pushforward_char(1, lb))
    return fixtures


@dataclass(frozen=True)
class SupportWitness:
    lam: Rat
    mu: Rat
    form: QForm6


def verify_support(
    p: ChargeParams,
    X: RuledThreefold,
    lambda_candidates: Sequence[Rat | int],
    mu_candidates: Sequence[Rat | int],
) -> SupportWitness | None:
    """Grid-search mu*Q_weak + lambda*Q_disc for a support-property witness.

    Returns the first witness in grid order (lambda outer, mu inner), or None.
    None is inconclusive: the family may simply miss every witness.
    """
    lams = [Fraction(x) for x in lambda_candidates]
    mus = [Fraction(x) for x in mu_candidates]
    if any(x < 0 for x in lams):
        raise ValueError("lambda candidates must be nonnegative")
    if any(x <= 0 for x in mus):
        raise ValueError("mu candidates must be positive")
    fun = charge_functionals(p, X)
    m = fun.matrix()
    if m.rank() < 2:
        return None
    kernel = m.kernel_basis()
    q_weak = bg_quadratic_form(p.tilt_point(), X)
    q_disc = disc_bar_form()
    fixtures = equality_case_fixtures(X)

    def check(pair):
        lam, mu = pair
        q = q_weak.scale(mu).add(q_disc.scale(lam))
        if not is_negative_definite_on(q, kernel):
            return None
        if any(q.value_char(ch) < 0 for ch in fixtures):
            return None
        return SupportWitness(lam, mu, q)

    grid = [(lam, mu) for lam in lams for mu in mus]
    for result in pmap(check, grid):
        if result is not None:
            return result
    return None
