"""Discriminants and Bogomolov-Gieseker-type inequalities as exact defects.

Every inequality is exposed as LHS - RHS (or the orientation making
"defect >= 0" mean "inequality holds"), so equality loci and margins are
visible. None of the checkers verifies the semistability hypothesis of the
statement it encodes; callers report verdicts as conditional.
"""

from __future__ import annotations

from fractions import Fraction

from .chern import TiltPoint, twist
from .exactnum import Rat
from .geometry import (
    CharVector,
    RuledThreefold,
    euler_char_pair,
    fiber_pushforward_char,
    line_bundle_char,
)
from .stability import nu


def disc_classical(ch: CharVector, X: RuledThreefold) -> tuple[Rat, Rat]:
    """Classical discriminant ch1^2 - 2 ch0 ch2 paired with F and with H."""
    d = X.degree
    p = ch.cHF
    q = ch.cHH - p * d
    f_delta = p * p - 2 * ch.r * ch.dF
    h_delta = p * p * d + 2 * p * q - 2 * ch.r * ch.dH
    return f_delta, h_delta


def disc_bar(ch: CharVector) -> Rat:
    """First generalized discriminant cHF^2 - 2 r dF; twist-invariant, integral on the lattice."""
    return ch.cHF * ch.cHF - 2 * ch.r * ch.dF


def disc_tilde(ch: CharVector, beta: Rat | int, X: RuledThreefold) -> Rat:
    """Second generalized discriminant at the twisted degrees; invariant under O(mF)."""
    tw = twist(ch, beta, X)
    return tw.cHF * tw.cHH - ch.r * tw.dH


def nabla(ch: CharVector, X: RuledThreefold) -> Rat:
    """Defect of the strongest slope-stability inequality; vanishes on line bundles."""
    d = X.degree
    return (
        Fraction(d, 3) * ch.r * ch.dF
        - Fraction(2 * d, 3) * ch.cHF * ch.cHF
        + ch.cHH * ch.cHF
        - ch.r * ch.dH
    )


def corollary_defect(ch: CharVector, X: RuledThreefold) -> Rat:
    """Same quantity as `nabla`, assembled from the two discriminants."""
    d = X.degree
    return (
        disc_tilde(ch, 0, X)
        - Fraction(d, 6) * disc_bar(ch)
        - Fraction(d, 2) * ch.cHF * ch.cHF
    )


def bg_main_defect(ch: CharVector, pt: TiltPoint, X: RuledThreefold) -> Rat:
    """Defect of the main third-Chern-character inequality at (alpha^2, beta)."""
    a2, d = pt.alpha2, X.degree
    tw = twist(ch, pt.beta, X)
    lhs = (tw.dF - a2 / 2 * ch.r) * (tw.dH - Fraction(d, 3) * tw.dF)
    rhs = (tw.e - a2 / 2 * tw.cHH + a2 * d / 3 * tw.cHF) * tw.cHF
    return lhs - rhs


def bg_nu_zero_defect(ch: CharVector, pt: TiltPoint, X: RuledThreefold) -> Rat:
    """Defect of the slope-zero form: bounds ch3 by the alpha^2-weighted degrees."""
    a2, d = pt.alpha2, X.degree
    tw = twist(ch, pt.beta, X)
    return a2 / 2 * tw.cHH - a2 * d / 3 * tw.cHF - tw.e


def bg_star_defect(ch: CharVector, pt: TiltPoint, X: RuledThreefold) -> Rat:
    """Defect of the slope-recentered form, evaluated at beta + nu.

    Equals bg_main_defect / cHF^beta identically; requires finite tilt slope.
    """
    v = nu(ch, pt)
    if v.is_infinite:
        raise ValueError("slope-recentered defect needs a finite tilt slope")
    a2, d = pt.alpha2, X.degree
    tw = twist(ch, pt.beta + v.value, X)
    rhs = (a2 + v.value * v.value) * (tw.cHH / 2 - Fraction(d, 3) * tw.cHF)
    return rhs - tw.e


def bg_weak_defect(ch: CharVector, pt: TiltPoint, X: RuledThreefold) -> Rat:
    """Defect of the weak form (coefficient d/4 instead of d/3)."""
    a2, d = pt.alpha2, X.degree
    tw = twist(ch, pt.beta, X)
    lhs = (tw.dF - a2 / 2 * ch.r) * tw.dH
    rhs = (tw.e - a2 / 2 * tw.cHH + a2 * d / 4 * tw.cHF) * tw.cHF
    return lhs - rhs


def liu_abcd(ch: CharVector, pt: TiltPoint, X: RuledThreefold) -> tuple[Rat, Rat, Rat, Rat]:
    """The four linear functionals with b*c - a*d = bg_weak_defect and
    mixed slope (d - t*a)/c."""
    a2, deg = pt.alpha2, X.degree
    tw = twist(ch, pt.beta, X)
    a = -tw.dF + a2 / 2 * ch.r
    b = -tw.e + a2 / 2 * tw.cHH - a2 * deg / 4 * tw.cHF
    c = tw.cHF
    d = tw.dH
    return a, b, c, d


def fiber_bogomolov_defect(k: int, A: CharVector, X: RuledThreefold) -> Rat:
    """Discriminant of the pushforward from k fibers; twist-invariant."""
    P = fiber_pushforward_char(k, A)
    return P.dH * P.dH - 2 * P.cHH * P.e


def prop42_chi_bounds(ch: CharVector, X: RuledThreefold) -> tuple[Rat, Rat]:
    """The two Euler-characteristic functionals against O(H) and O(2H).

    Closed forms; must agree with euler_char_pair on every character.
    """
    g, d = X.genus, X.degree
    chi1 = (
        ch.e
        + ch.dH / 2
        - (g - 1 + Fraction(d, 2)) * ch.dF
        - Fraction(3 * g - 3 + d, 6) * ch.cHF
    )
    chi2 = (
        ch.e
        - ch.dH / 2
        - (g - 1 + Fraction(d, 2)) * ch.dF
        + Fraction(3 * g - 3 + 2 * d, 6) * ch.cHF
    )
    return chi1, chi2


def chi_bounds_via_rr(ch: CharVector, X: RuledThreefold) -> tuple[Rat, Rat]:
    """The same two functionals through the Riemann-Roch pairing route."""
    return (
        euler_char_pair(X, line_bundle_char(1, 0, X), ch),
        euler_char_pair(X, line_bundle_char(2, 0, X), ch),
    )
