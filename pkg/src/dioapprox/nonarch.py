"""A concrete non-Archimedean ordered field with a floor.

The field is the rational functions / Laurent series in eps = 1/t over
the rationals, ordered by making t positively infinite: the sign of an
element is the sign of its lowest-order eps coefficient.  The integer
part consists of polynomials in t whose constant coefficient is an
integer; between 0 and 1 it contains nothing, and every element of the
field has a unique floor in it.

Two backends carry elements: RatFunc (exact quotients of polynomials)
and EpsSeries (eager truncations with tracked precision).  Rational
functions are exact everywhere; series operations propagate the window
of known coefficients and refuse to answer sign questions the window
cannot settle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    DomainError,
    IndeterminateSignError,
    ParseError,
    PrecisionError,
)

__all__ = [
    "DEFAULT_PRECISION",
    "EpsSeries",
    "IPElem",
    "LaurentElem",
    "LinfReport",
    "Poly",
    "RatFunc",
    "add",
    "beatty_nonarch",
    "compare",
    "div",
    "floor_ip",
    "format_laurent",
    "is_finite",
    "is_infinitesimal",
    "linf_experiment",
    "mul",
    "parse_laurent",
    "sign_of",
    "sqrt1p_eps",
    "std_part",
    "sub",
]

DEFAULT_PRECISION = 64


class Poly:
    """Polynomial in t over the rationals; coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        return Poly(c * k for c in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlc = other.lc()
        dd = other.deg
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlc
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
        return Poly(q), Poly(rem)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        return _poly_str(self)


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.lc())  # monic


def _poly_str(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.deg, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            tpow = "t" if i == 1 else f"t^{i}"
            body = tpow if mag == 1 else f"{mag}*{tpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class RatFunc:
    """Reduced quotient of polynomials in t; the exact backend."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly([1])):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = _poly_gcd(num, den)
        if not g.is_zero() and g.deg > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lc = den.lc()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, q) -> "RatFunc":
        return cls(Poly([Fraction(q)]))

    @classmethod
    def t_power(cls, k: int) -> "RatFunc":
        if k >= 0:
            return cls(Poly([0] * k + [1]))
        return cls(Poly([1]), Poly([0] * (-k) + [1]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def sign(self) -> int:
        if self.num.is_zero():
            return 0
        lc = self.num.lc()  # den is monic
        return 1 if lc > 0 else -1

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return format_laurent(self)


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, IPElem):
        return RatFunc(x.poly)
    return NotImplemented


class EpsSeries:
    """Truncated eps-power series: coefficients for eps^i, lead <= i < prec.

    ``exact`` means every coefficient outside the stored window is zero,
    i.e. the element is really a Laurent polynomial.  Otherwise nothing
    is known from ``prec`` on, and sign/floor questions that depend on
    the unknown tail raise instead of guessing.
    """

    __slots__ = ("lead", "coeffs", "exact")

    def __init__(self, lead: int, coeffs: tuple, exact: bool):
        self.lead = lead
        self.coeffs = coeffs
        self.exact = exact

    @classmethod
    def make(cls, lead: int, coeffs: Iterable, exact: bool) -> "EpsSeries":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            lead += 1
        if exact:
            while cs and cs[-1] == 0:
                cs.pop()
            if not cs:
                return cls(0, (), True)
        return cls(lead, tuple(cs), exact)

    @property
    def prec(self) -> int:
        return self.lead + len(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        if i < self.lead:
            return Fraction(0)
        if i < self.prec:
            return self.coeffs[i - self.lead]
        if self.exact:
            return Fraction(0)
        raise PrecisionError(f"coefficient of eps^{i} is beyond precision {self.prec}")

    def is_exact_zero(self) -> bool:
        return self.exact and not self.coeffs

    def sign(self) -> int:
        if self.coeffs:
            c = self.coeffs[0]
            return 1 if c > 0 else -1
        if self.exact:
            return 0
        raise IndeterminateSignError(
            f"all coefficients below eps^{self.prec} vanish and the tail is "
            "not flagged exactly zero"
        )

    def __repr__(self):
        return f"EpsSeries(lead={self.lead}, coeffs={self.coeffs}, exact={self.exact})"

    def __str__(self):
        return format_laurent(self)

    # arithmetic via the module-level dispatchers
    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return EpsSeries(self.lead, tuple(-c for c in self.coeffs), self.exact)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)


LaurentElem = Union[RatFunc, EpsSeries]


def to_series(x, prec: int = DEFAULT_PRECISION) -> EpsSeries:
    """Expand into eps powers.  Exact when the denominator is a monomial."""
    if isinstance(x, EpsSeries):
        return x
    x = _as_ratfunc(x)
    if x is NotImplemented:
        raise DomainError("cannot expand this object as a series")
    if x.is_zero():
        return EpsSeries(0, (), True)
    f, g = x.num, x.den
    # f(t) = eps^(-deg f) * fr(eps) with reversed coefficients
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    lead = g.deg - f.deg
    if len(gr) == 1:  # monomial denominator: exact Laurent polynomial
        cs = [c / gr[0] for c in fr]
        return EpsSeries.make(lead, cs, True)
    width = prec - lead
    if width <= 0:
        raise PrecisionError(
            f"requested precision {prec} cannot hold a series starting at {lead}"
        )
    out = []
    for n in range(width):
        acc = fr[n] if n < len(fr) else Fraction(0)
        for k in range(1, n + 1):
            if k < len(gr) and gr[k]:
                acc -= gr[k] * out[n - k]
        out.append(acc / gr[0])
    return EpsSeries.make(lead, out, False)


def _coerce(x, y) -> tuple[LaurentElem, LaurentElem]:
    xs = isinstance(x, EpsSeries)
    ys = isinstance(y, EpsSeries)
    if xs and not ys:
        return x, to_series(y, x.prec if not x.exact else DEFAULT_PRECISION)
    if ys and not xs:
        return to_series(x, y.prec if not y.exact else DEFAULT_PRECISION), y
    if not xs and not ys:
        a, b = _as_ratfunc(x), _as_ratfunc(y)
        if a is NotImplemented or b is NotImplemented:
            raise DomainError("unsupported operand types for Laurent arithmetic")
        return a, b
    return x, y


_INF = None  # sentinel for "known to every order"


def _prec_or_inf(s: EpsSeries):
    return _INF if s.exact else s.prec


def _min_prec(a, b):
    if a is _INF:
        return b
    if b is _INF:
        return a
    return min(a, b)


def _series_add(x: EpsSeries, y: EpsSeries, negate: bool) -> EpsSeries:
    prec = _min_prec(_prec_or_inf(x), _prec_or_inf(y))
    if x.is_exact_zero():
        return (-y) if negate else y
    if y.is_exact_zero():
        return x
    lo = min(x.lead, y.lead)
    hi = prec if prec is not _INF else max(x.prec, y.prec)
    out = []
    for i in range(lo, hi):
        c = x.coeff(i) + (-y.coeff(i) if negate else y.coeff(i))
        out.append(c)
    return EpsSeries.make(lo, out, prec is _INF)


def _series_mul(x: EpsSeries, y: EpsSeries) -> EpsSeries:
    if x.is_exact_zero() or y.is_exact_zero():
        return EpsSeries(0, (), True)
    px, py = _prec_or_inf(x), _prec_or_inf(y)
    if px is _INF and py is _INF:
        prec = _INF
        hi = x.prec + y.prec  # enough room for the full product
    else:
        prec = _min_prec(
            _INF if px is _INF else px + y.lead,
            _INF if py is _INF else py + x.lead,
        )
        hi = prec
    lo = x.lead + y.lead
    out = [Fraction(0)] * (hi - lo)
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            k = i + j
            if k < len(out):
                out[k] += a * b
    return EpsSeries.make(lo, out, prec is _INF)


def _series_inverse(x: EpsSeries, prec_hint: Optional[int] = None) -> EpsSeries:
    if not x.coeffs:
        if x.exact:
            raise ZeroDivisionError("division by exact zero series")
        raise PrecisionError(
            "cannot invert: no nonzero coefficient within the known window"
        )
    v = x.lead
    s0 = x.coeffs[0]
    if x.exact and len(x.coeffs) == 1:
        return EpsSeries.make(-v, [1 / s0], True)
    if x.exact:
        width = (prec_hint if prec_hint is not None else DEFAULT_PRECISION) + v
        width = max(width, 1)
    else:
        width = x.prec - v
    inv = [1 / s0]
    for n in range(1, width):
        acc = Fraction(0)
        for k in range(1, n + 1):
            sk = x.coeffs[k] if k < len(x.coeffs) else Fraction(0)
            if sk:
                acc += sk * inv[n - k]
        inv.append(-acc / s0)
    return EpsSeries.make(-v, inv, False)


def add(x, y) -> LaurentElem:
    x, y = _coerce(x, y)
    if isinstance(x, RatFunc):
        return RatFunc(x.num * y.den + y.num * x.den, x.den * y.den)
    return _series_add(x, y, negate=False)


def sub(x, y) -> LaurentElem:
    x, y = _coerce(x, y)
    if isinstance(x, RatFunc):
        return RatFunc(x.num * y.den - y.num * x.den, x.den * y.den)
    return _series_add(x, y, negate=True)


def mul(x, y) -> LaurentElem:
    x, y = _coerce(x, y)
    if isinstance(x, RatFunc):
        return RatFunc(x.num * y.num, x.den * y.den)
    return _series_mul(x, y)


def div(x, y) -> LaurentElem:
    x, y = _coerce(x, y)
    if isinstance(x, RatFunc):
        if y.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(x.num * y.den, x.den * y.num)
    hint = None if x.exact else x.prec - x.lead
    return _series_mul(x, _series_inverse(y, prec_hint=hint))


def sign_of(x) -> int:
    if isinstance(x, EpsSeries):
        return x.sign()
    rf = _as_ratfunc(x)
    if rf is NotImplemented:
        raise DomainError("unsupported operand for sign")
    return rf.sign()


def compare(x, y) -> int:
    return sign_of(sub(x, y))


def _split_ratfunc(x: RatFunc) -> tuple[Poly, RatFunc]:
    """x = polynomial part + proper (infinitesimal) remainder."""
    q, r = x.num.divmod(x.den)
    return q, RatFunc(r, x.den)


def is_infinitesimal(x) -> bool:
    """Smaller in magnitude than every positive rational?"""
    if isinstance(x, EpsSeries):
        if x.is_exact_zero():
            return True
        if x.coeffs:
            return x.lead >= 1
        raise IndeterminateSignError(
            "window shows no coefficients; infinitesimality is undecidable"
        )
    x = _as_ratfunc(x)
    return x.is_zero() or x.num.deg < x.den.deg


def is_finite(x) -> bool:
    if isinstance(x, EpsSeries):
        if not x.coeffs:
            if x.exact:
                return True
            raise IndeterminateSignError("window shows no coefficients")
        return x.lead >= 0
    x = _as_ratfunc(x)
    return x.is_zero() or x.num.deg <= x.den.deg


def std_part(x) -> Fraction:
    """The rational a finite element differs from by an infinitesimal."""
    if not is_finite(x):
        raise DomainError("standard part of an infinite element")
    if isinstance(x, EpsSeries):
        return x.coeff(0)
    x = _as_ratfunc(x)
    q, _ = _split_ratfunc(x)
    return q.coeff(0)


class IPElem:
    """Element of the integer part: polynomial in t, integer constant."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        c0 = poly.coeff(0)
        if c0.denominator != 1:
            raise DomainError(
                f"constant coefficient must be an integer, got {c0}"
            )
        self.poly = poly

    @classmethod
    def const(cls, n: int) -> "IPElem":
        return cls(Poly([n]))

    def constant(self) -> int:
        return int(self.poly.coeff(0))

    def is_standard(self) -> bool:
        return self.poly.deg <= 0

    def to_laurent(self) -> RatFunc:
        return RatFunc(self.poly)

    def __add__(self, other):
        if isinstance(other, IPElem):
            return IPElem(self.poly + other.poly)
        if isinstance(other, int):
            return IPElem(self.poly + Poly([other]))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return IPElem(-self.poly)

    def __sub__(self, other):
        if isinstance(other, IPElem):
            return IPElem(self.poly - other.poly)
        if isinstance(other, int):
            return IPElem(self.poly - Poly([other]))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, IPElem):
            return IPElem(self.poly * other.poly)
        if isinstance(other, int):
            return IPElem(self.poly.scale(other))
        return NotImplemented

    __rmul__ = __mul__

    def sign(self) -> int:
        return RatFunc(self.poly).sign()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.poly == Poly([other])
        return isinstance(other, IPElem) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __repr__(self):
        return f"IPElem({self.poly!r})"

    def __str__(self):
        return str(self.poly)


def _floor_from_parts(poly_part: Poly, tail_sign: int) -> IPElem:
    c0 = poly_part.coeff(0)
    base = int(c0.numerator // c0.denominator)  # floor of the constant
    if c0.denominator == 1 and tail_sign < 0:
        base -= 1
    adjusted = poly_part - Poly([c0]) + Poly([base])
    return IPElem(adjusted)


def floor_ip(x) -> IPElem:
    """The unique integer-part element a with a <= x < a + 1.

    Exact for rational functions.  For series the tail sign is read off
    the known positive-index coefficients and refused when they are all
    zero without the exact flag.
    """
    if isinstance(x, EpsSeries):
        if not x.exact and x.prec <= 0:
            raise PrecisionError(
                f"floor needs coefficients through eps^0; precision is {x.prec}"
            )
        poly_cs = []
        for i in range(min(x.lead, 0), 1):
            poly_cs.append(x.coeff(i))
        # eps^i for i <= 0 is t^(-i): reverse into ascending t powers
        poly_part = Poly(reversed(poly_cs))
        tail_sign = 0
        for i in range(1, max(x.prec, 1)):
            c = x.coeff(i)
            if c != 0:
                tail_sign = 1 if c > 0 else -1
                break
        if tail_sign == 0 and not x.exact:
            raise IndeterminateSignError(
                "tail sign unknown: computed coefficients are all zero and "
                "the series is not flagged exactly zero beyond them"
            )
        return _floor_from_parts(poly_part, tail_sign)
    rf = _as_ratfunc(x)
    if rf is NotImplemented:
        raise DomainError("unsupported operand for floor")
    q, tail = _split_ratfunc(rf)
    result = _floor_from_parts(q, tail.sign())
    # bracketing is cheap to confirm exactly on this backend
    delta = sub(rf, result.to_laurent())
    if delta.sign() < 0 or sub(delta, RatFunc.const(1)).sign() >= 0:
        raise AssertionError(f"floor bracketing failed for {rf}")
    return result


def sqrt1p_eps(prec: int = DEFAULT_PRECISION) -> EpsSeries:
    """The square root of 1 + eps as a binomial series.

    Its square reproduces 1 + eps through every requested coefficient,
    and it lies outside the rational functions, giving the model a
    genuinely irrational element.
    """
    if prec < 1:
        raise DomainError("need at least one coefficient")
    cs = [Fraction(1)]
    for k in range(1, prec):
        cs.append(cs[-1] * (Fraction(3, 2) - k) / k)
    return EpsSeries.make(0, cs, False)


def beatty_nonarch(alpha: LaurentElem, n: IPElem) -> IPElem:
    """floor(n * alpha) in the model; n ranges over integer-part elements."""
    if sign_of(alpha) <= 0:
        raise DomainError("alpha must be positive")
    if n.sign() < 0:
        raise DomainError("index must be >= 0")
    return floor_ip(mul(alpha, n.to_laurent()))


@dataclass(frozen=True)
class LinfReport:
    applicable: bool
    reason: Optional[str] = None
    m: Optional[int] = None
    k: Optional[int] = None
    separator: Optional[IPElem] = None
    lower_neighbor: Optional[IPElem] = None
    upper_neighbor: Optional[IPElem] = None


def linf_experiment(sigma: LaurentElem, rho: LaurentElem) -> LinfReport:
    """Constructive separation of two slopes in [1, 2) whose difference
    is not infinitesimal.

    m = floor(1/(rho - sigma)) is then a standard integer; scanning
    k <= m finds the first index where the floors split, and
    floor((k+1)*sigma) lands strictly between consecutive elements of
    the rho-sequence, separating the two.
    """
    for name, x in (("sigma", sigma), ("rho", rho)):
        if compare(x, RatFunc.const(1)) < 0 or compare(x, RatFunc.const(2)) >= 0:
            raise DomainError(f"{name} must lie in [1, 2)")
    diff = sub(rho, sigma)
    if diff.sign() <= 0:
        raise DomainError("need sigma < rho")
    if is_infinitesimal(diff):
        return LinfReport(False, reason="rho - sigma is infinitesimal")
    m_elem = floor_ip(div(RatFunc.const(1), diff))
    if not m_elem.is_standard():
        raise AssertionError("non-infinitesimal difference gave an infinite bound")
    m = m_elem.constant()
    one = IPElem.const(1)
    prev_s = beatty_nonarch(sigma, one)
    prev_r = beatty_nonarch(rho, one)
    for k in range(1, m + 1):
        next_s = beatty_nonarch(sigma, IPElem.const(k + 1))
        next_r = beatty_nonarch(rho, IPElem.const(k + 1))
        if prev_s == prev_r and next_s != next_r:
            sep = next_s
            if not (prev_r < sep and sep < next_r):
                raise AssertionError("separator did not fall between neighbors")
            return LinfReport(True, m=m, k=k, separator=sep,
                              lower_neighbor=prev_r, upper_neighbor=next_r)
        prev_s, prev_r = next_s, next_r
    raise AssertionError(f"no split found although floor((m+1)sigma) < floor((m+1)rho), m={m}")


# -- textual syntax ------------------------------------------------------


def _parse_poly(text: str, start: int, end: int) -> Poly:
    """Integer-coefficient polynomial in t: e.g. '3*t^2 - t + 1'."""
    coeffs: dict[int, Fraction] = {}
    i = start
    first = True
    while True:
        while i < end and text[i].isspace():
            i += 1
        if i >= end:
            if first:
                raise ParseError("empty polynomial", text, i)
            break
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i += 1
            while i < end and text[i].isspace():
                i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, i)
        first = False
        coef = None
        j = i
        while j < end and text[j].isdigit():
            j += 1
        if j > i:
            coef = int(text[i:j])
            i = j
            while i < end and text[i].isspace():
                i += 1
            if i < end and text[i] == "*":
                i += 1
                while i < end and text[i].isspace():
                    i += 1
        power = 0
        if i < end and text[i] == "t":
            i += 1
            power = 1
            if i < end and text[i] == "^":
                i += 1
                j = i
                while j < end and text[j].isdigit():
                    j += 1
                if j == i:
                    raise ParseError("expected exponent digits", text, i)
                power = int(text[i:j])
                i = j
            if coef is None:
                coef = 1
        if coef is None:
            raise ParseError("expected a coefficient or 't'", text, i)
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    deg = max(coeffs) if coeffs else 0
    return Poly([coeffs.get(k, Fraction(0)) for k in range(deg + 1)])


def _top_level_slash(text: str) -> Optional[int]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", text, i)
        elif ch == "/" and depth == 0:
            return i
    if depth != 0:
        raise ParseError("unbalanced '('", text, len(text))
    return None


def _strip_parens(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start < end and text[start] == "(" and text[end - 1] == ")":
        depth = 0
        for i in range(start, end):
            if text[i] == "(":
                depth += 1
            elif text[i] == ")":
                depth -= 1
                if depth == 0 and i != end - 1:
                    return start, end  # parens do not wrap the whole span
        return _strip_parens(text, start + 1, end - 1)
    return start, end


def _require_unambiguous_side(text: str, start: int, end: int, side: str):
    """A quotient side with interior +/- must be parenthesized, otherwise
    't - 1/t' would silently read as '(t-1)/t'."""
    span = text[start:end].strip()
    if span.startswith("("):
        return
    for i, ch in enumerate(span):
        if ch in "+-" and i > 0:
            raise ParseError(
                f"ambiguous {side} of '/': parenthesize it", text, start
            )


def parse_laurent(text: str, prec: int = DEFAULT_PRECISION) -> LaurentElem:
    """Parse 'poly', '(poly)/(poly)' or the builtin 'sqrt1p(eps)'."""
    stripped = text.strip()
    if stripped == "sqrt1p(eps)":
        return sqrt1p_eps(prec)
    cut = _top_level_slash(text)
    if cut is None:
        s, e = _strip_parens(text, 0, len(text))
        return RatFunc(_parse_poly(text, s, e))
    _require_unambiguous_side(text, 0, cut, "numerator")
    _require_unambiguous_side(text, cut + 1, len(text), "denominator")
    ns, ne = _strip_parens(text, 0, cut)
    ds, de = _strip_parens(text, cut + 1, len(text))
    num = _parse_poly(text, ns, ne)
    den = _parse_poly(text, ds, de)
    if den.is_zero():
        raise ParseError("zero denominator", text, cut + 1)
    return RatFunc(num, den)


def format_laurent(x: LaurentElem) -> str:
    """Exact textual form: polynomial, quotient, or truncated series."""
    if isinstance(x, RatFunc):
        if x.den == Poly([1]):
            return _poly_str(x.num)
        return f"({_poly_str(x.num)})/({_poly_str(x.den)})"
    if isinstance(x, IPElem):
        return _poly_str(x.poly)
    parts = []
    for idx, c in enumerate(x.coeffs):
        i = x.lead + idx
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            epow = "eps" if i == 1 else (f"eps^{i}" if i > 1 else f"eps^({i})")
            body = epow if mag == 1 else f"{mag}*{epow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        parts.append("0")
    if not x.exact:
        parts.append(f"+ O(eps^{x.prec})")
    return " ".join(parts)
