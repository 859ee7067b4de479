"""Shared constants and independent oracles for the test suite.

The interval oracle evaluates radical expressions with rational bounds
of increasing precision; it is deliberately separate from the library's
sign machinery so the two can check each other.
"""

from fractions import Fraction

from dioapprox.exactnum import quad, sqrt_int

SQRT2 = sqrt_int(2)
SQRT3 = sqrt_int(3)
SQRT2_M1 = quad(-1, 1, 1, 2)        # sqrt(2) - 1
PHI = quad(1, 1, 2, 5)              # (1 + sqrt(5)) / 2
PHI_SQ = quad(3, 1, 2, 5)           # phi^2 = (3 + sqrt(5)) / 2
PHI_M1 = quad(-1, 1, 2, 5)          # phi - 1

SQUAREFREE_POOL = (2, 3, 5, 6, 7, 10, 11, 13, 15, 17)


def sqrt_bounds(x: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(x) <= hi with hi - lo <= 2^-prec."""
    from math import isqrt

    if x < 0:
        raise ValueError("negative radicand")
    scale = 1 << prec
    n = x.numerator * scale * scale
    d = x.denominator
    # sqrt(n/d) = sqrt(n*d)/d
    root = isqrt(n * d)
    lo = Fraction(root, d * scale)
    hi = Fraction(root + 1, d * scale)
    return lo, hi


def interval_sign(u, v=0, d=1, w=0, e=1, max_prec: int = 256):
    """Sign of u + v*sqrt(d) + w*sqrt(e) by interval refinement.

    Returns -1/+1 once an enclosure excludes zero, or None when every
    refinement up to max_prec still brackets zero (i.e. the value is
    either zero or too close to call -- the caller decides).
    """
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    prec = 8
    while prec <= max_prec:
        lo, hi = u, u
        for coef, rad in ((v, d), (w, e)):
            if coef == 0:
                continue
            slo, shi = sqrt_bounds(Fraction(rad), prec)
            if coef > 0:
                lo += coef * slo
                hi += coef * shi
            else:
                lo += coef * shi
                hi += coef * slo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2
    return None
