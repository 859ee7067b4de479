"""Floor sequences ("Beatty sequences") over finite windows.

Membership and windows come with witnesses; partition / inclusion /
intersection claims are checked against windows; certificate searches
produce integer linear relations that are re-verified exactly before
being returned.  Infinite-set claims are probed on finite windows with
explicit limits and exhaustion reports, never silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional

from .errors import (
    DomainError,
    InvalidCertificateError,
    RationalInputError,
    UnsupportedPairingError,
)
from .exactnum import (
    ExactReal,
    RelationForm,
    ceil_of,
    compare,
    decompose,
    ensure_exact,
    floor_of,
    frac_of,
    is_rational,
    linear_relation_solve,
    radical_sign,
    sign_of,
)

__all__ = [
    "ApDecompositionReport",
    "ArithProgression",
    "BeattyWindow",
    "CertKind",
    "Certificate",
    "Claim51Report",
    "CommonScan",
    "ImplicationReport",
    "PartitionReport",
    "SeparationResult",
    "agreement_radius",
    "ap_decomposition",
    "beatty_term",
    "certificate_search",
    "claim51_check",
    "common_elements",
    "dmo_window_search",
    "kronecker_search",
    "member",
    "mu",
    "partition_check",
    "pth_root_dmo_witness",
    "residue_search",
    "separation_witness",
    "verify_certificate",
    "verify_implication",
    "window",
]

DEFAULT_SCAN_LIMIT = 100_000


def _positive(alpha) -> ExactReal:
    alpha = ensure_exact(alpha)
    if sign_of(alpha) <= 0:
        raise DomainError("alpha must be positive")
    return alpha


def beatty_term(alpha, n: int) -> int:
    """floor(n * alpha), the n-th sequence element."""
    alpha = _positive(alpha)
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    return floor_of(alpha * n)


def member(alpha, k: int) -> Optional[int]:
    """Witness n with floor(n*alpha) = k, or None.

    The least n with n*alpha >= k is ceil(k/alpha); k is a member
    exactly when that n keeps n*alpha below k + 1.
    """
    alpha = _positive(alpha)
    if k < 0:
        raise DomainError(f"membership is about k >= 0, got {k}")
    if k == 0:
        return 0
    n = ceil_of(k / alpha)
    return n if compare(alpha * n, k + 1) < 0 else None


@dataclass(frozen=True, eq=False)
class BeattyWindow:
    """The members of a floor sequence that lie in [0, bound], with a
    witness index for each member."""

    alpha: ExactReal
    bound: int
    members: tuple[int, ...]
    witnesses: dict[int, int]

    def member_set(self) -> set[int]:
        return set(self.members)


def window(alpha, bound: int) -> BeattyWindow:
    """Complete membership set on [0, bound] by direct enumeration."""
    alpha = _positive(alpha)
    if bound < 0:
        raise DomainError(f"window bound must be >= 0, got {bound}")
    witnesses: dict[int, int] = {}
    n = 0
    while True:
        v = floor_of(alpha * n)
        if v > bound:
            break
        witnesses.setdefault(v, n)
        n += 1
    members = tuple(sorted(witnesses))
    return BeattyWindow(alpha, bound, members, witnesses)


def mu(alpha, h: int) -> int:
    """How many n >= 1 satisfy floor(n*alpha) <= h: ceil((h+1)/alpha) - 1."""
    alpha = _positive(alpha)
    if h < 0:
        raise DomainError(f"mu needs h >= 0, got {h}")
    return ceil_of((h + 1) / alpha) - 1


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    checked_to: int
    first_shared: Optional[int] = None
    first_uncovered: Optional[int] = None
    shared_witnesses: Optional[tuple[int, int]] = None


def partition_check(alpha, beta, bound: int) -> PartitionReport:
    """Do the two windows tile [1, bound] with no overlap?

    Index 0 belongs to both sequences by definition, so the check runs
    over [1, bound] and reports the first violation of either kind.
    """
    alpha, beta = _positive(alpha), _positive(beta)
    if compare(alpha, 1) <= 0 or compare(beta, 1) <= 0:
        raise DomainError("partition checking needs alpha, beta > 1")
    wa, wb = window(alpha, bound), window(beta, bound)
    in_a, in_b = wa.member_set(), wb.member_set()
    first_shared = None
    first_uncovered = None
    shared_witnesses = None
    for k in range(1, bound + 1):
        a, b = k in in_a, k in in_b
        if a and b and first_shared is None:
            first_shared = k
            shared_witnesses = (wa.witnesses[k], wb.witnesses[k])
        if not a and not b and first_uncovered is None:
            first_uncovered = k
        if first_shared is not None and first_uncovered is not None:
            break
    ok = first_shared is None and first_uncovered is None
    return PartitionReport(ok, bound, first_shared, first_uncovered, shared_witnesses)


@dataclass(frozen=True)
class ArithProgression:
    """m*t + k for t = 0, 1, 2, ...  with 0 <= k < m."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise DomainError(
                f"bad progression ({self.modulus}, {self.residue})"
            )

    def covers(self, x: int) -> bool:
        return x >= 0 and x % self.modulus == self.residue


@dataclass(frozen=True)
class ApDecompositionReport:
    progressions: tuple[ArithProgression, ...]
    ok: bool
    checked_to: int
    mismatch: Optional[int] = None
    forbidden_hit: Optional[int] = None


def ap_decomposition(p: int, q: int, bound: int) -> ApDecompositionReport:
    """Decompose the floor sequence of p/q > 1 into q progressions mod p.

    The residues are floor(p*r/q) for r = 0..q-1; the union is verified
    against the window and the residue p-1 must never occur.
    """
    if q < 1 or p < 1:
        raise DomainError("need positive integers p, q")
    g = gcd(p, q)
    p, q = p // g, q // g
    if p <= q:
        raise DomainError(f"need p/q > 1, got {p}/{q}")
    progs = tuple(ArithProgression(p, (p * r) // q) for r in range(q))
    residues = {pr.residue for pr in progs}
    members = window(Fraction(p, q), bound).member_set()
    mismatch = None
    forbidden_hit = None
    for k in range(0, bound + 1):
        predicted = k % p in residues
        if predicted != (k in members):
            mismatch = k
            break
        if k in members and k % p == p - 1:
            forbidden_hit = k
            break
    ok = mismatch is None and forbidden_hit is None
    return ApDecompositionReport(progs, ok, bound, mismatch, forbidden_hit)


# -- separation ---------------------------------------------------------

FOUND = "found"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class SeparationResult:
    status: str
    witness: Optional[int]
    container: Optional[str]  # which input's sequence holds the witness
    trace: dict = field(default_factory=dict)


def _floor_inv_diff(big: ExactReal, small: ExactReal) -> int:
    """floor(1/(big - small)) for big > small, across radicands.

    Same-field differences go through ordinary floor; otherwise the
    predicate n*(big - small) <= 1 is searched by doubling + bisection,
    each test being one exact two-radical sign evaluation.
    """
    u1, v1, d1 = decompose(big)
    u2, v2, d2 = decompose(small)
    if v1 == 0 or v2 == 0 or d1 == d2:
        return floor_of(1 / (big - small))

    def at_most_one(n: int) -> bool:
        # sign of 1 - n*(big - small)
        s = radical_sign(1 - n * (u1 - u2), -n * v1, d1, n * v2, d2)
        return s >= 0

    hi = 1
    while at_most_one(hi):
        hi *= 2
    lo = hi // 2  # at_most_one(lo) holds (or lo = 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if at_most_one(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _conjugate(x: ExactReal) -> ExactReal:
    """x / (x - 1): the complementary density for x in (1, 2)."""
    return x / (x - 1)


def _witness_both_large(big: ExactReal, small: ExactReal) -> tuple[int, int]:
    """For big > small >= 2: an element of the small sequence missing from
    the big one, namely floor((m+1)*small) with m = floor(1/(big-small))."""
    m = _floor_inv_diff(big, small)
    x = floor_of(small) if m == 0 else floor_of(small * (m + 1))
    return x, m


def _verified(alpha, beta, x: int, container: str, trace: dict) -> SeparationResult:
    inside = alpha if container == "alpha" else beta
    outside = beta if container == "alpha" else alpha
    if member(inside, x) is None or member(outside, x) is not None:
        raise AssertionError(
            f"separation witness {x} failed its membership re-check"
        )
    return SeparationResult(FOUND, x, container, trace)


def _separate_rational_pair(alpha: Fraction, beta: Fraction) -> SeparationResult:
    """Both rational in (1, 2): conjugate to (2, inf), then repair the
    witness by a periodic scan when the progression structure blocks it."""
    rho, sigma = (alpha, beta) if alpha < beta else (beta, alpha)
    eta, gam = _conjugate(rho), _conjugate(sigma)  # eta > gam > 2
    x0, m = _witness_both_large(eta, gam)
    p = Fraction(rho).numerator
    s = Fraction(sigma).numerator
    trace = {"method": "conjugate-pair", "m": m, "x0": x0}
    if member(rho, x0) is not None and member(sigma, x0) is None:
        container = "alpha" if rho == alpha else "beta"
        return _verified(alpha, beta, x0, container, trace)
    # Residues mod p / mod s can block the conjugate witness; both
    # sequences are unions of progressions, so the symmetric difference
    # is periodic and a bounded scan must find it.
    period = p * s // gcd(p, s)
    trace["method"] = "periodic-scan"
    trace["period"] = period
    for k in range(1, period + 1):
        in_a = member(alpha, k) is not None
        in_b = member(beta, k) is not None
        if in_a != in_b:
            container = "alpha" if in_a else "beta"
            return _verified(alpha, beta, k, container, trace | {"x0": k})
    raise AssertionError("distinct rational slopes produced identical windows")


def separation_witness(alpha, beta) -> SeparationResult:
    """Produce k lying in exactly one of the two sequences, verified by
    member() on both sides.

    Covers: both slopes >= 2; exactly one below 2; both in (1, 2) of the
    same rationality class; and the rational-below-irrational mixed case.
    The irrational-below-rational mixed case where (m+1)*rho/(rho-1) is
    an integer is reported UNSUPPORTED (see claim51_check for the probe).
    """
    alpha, beta = _positive(alpha), _positive(beta)
    if compare(alpha, 1) <= 0 or compare(beta, 1) <= 0:
        raise DomainError("separation needs alpha, beta > 1")
    order = compare(alpha, beta)
    if order == 0:
        raise DomainError("alpha and beta must be distinct")
    big, big_name = (alpha, "alpha") if order > 0 else (beta, "beta")
    small, small_name = (beta, "beta") if order > 0 else (alpha, "alpha")

    if compare(small, 2) >= 0:
        x, m = _witness_both_large(big, small)
        return _verified(alpha, beta, x, small_name, {"method": "direct", "m": m})

    if compare(big, 2) >= 0:
        # small in (1, 2), big >= 2: 1 = floor(small) is missed by big
        return _verified(alpha, beta, 1, small_name, {"method": "integer-gap"})

    # both strictly inside (1, 2)
    if is_rational(alpha) and is_rational(beta):
        return _separate_rational_pair(Fraction(alpha), Fraction(beta))

    if not is_rational(alpha) and not is_rational(beta):
        eta, gam = _conjugate(small), _conjugate(big)  # eta > gam > 2
        x, m = _witness_both_large(eta, gam)
        # x is in the small slope's sequence and out of the big one's
        return _verified(alpha, beta, x, small_name,
                         {"method": "conjugate-pair", "m": m})

    # mixed rational / irrational in (1, 2)
    if is_rational(small):
        rho, beta_irr = Fraction(small), big
        m = floor_of((rho - 1) * (beta_irr - 1) / (beta_irr - rho))
        x = floor_of((m + 1) * _conjugate(beta_irr))
        return _verified(alpha, beta, x, small_name,
                         {"method": "mixed-rational-below", "m": m})

    rho = Fraction(big)
    beta_irr = small
    m = floor_of((beta_irr - 1) * (rho - 1) / (rho - beta_irr))
    t = (m + 1) * rho / (rho - 1)
    if t.denominator == 1:
        return SeparationResult(
            UNSUPPORTED,
            None,
            None,
            {
                "method": "open-case",
                "m": m,
                "t": int(t),
                "hint": "claim51_check probes this configuration",
            },
        )
    x = floor_of(t)
    return _verified(alpha, beta, x, small_name,
                     {"method": "mixed-irrational-below", "m": m})


# -- certificates -------------------------------------------------------


class CertKind(str, Enum):
    DISJOINT = "disjoint"
    COVER = "cover"
    SUBSET = "subset"
    PARTITION = "partition"
    FACT_C = "fact_c"
    FACT_D = "fact_d"
    FACT_F_PRIME = "fact_f_prime"


@dataclass(frozen=True)
class Certificate:
    kind: CertKind
    a: int
    b: int
    c: int


_KIND_FORM = {
    CertKind.DISJOINT: RelationForm.DISJOINT_UNIT,
    CertKind.COVER: RelationForm.COVER_UNIT,
    CertKind.SUBSET: RelationForm.SUBSET_UNIT,
    CertKind.FACT_F_PRIME: RelationForm.SUBSET_UNIT,
    CertKind.FACT_C: RelationForm.MIXED_SIGN_INT,
    CertKind.FACT_D: RelationForm.POSITIVE_INT,
}

_NEED_IRRATIONAL = {
    CertKind.DISJOINT,
    CertKind.COVER,
    CertKind.SUBSET,
    CertKind.PARTITION,
    CertKind.FACT_C,
    CertKind.FACT_D,
}


def _check_pairing(kind: CertKind, alpha: ExactReal, beta: ExactReal):
    ra, rb = is_rational(alpha), is_rational(beta)
    if ra != rb:
        raise UnsupportedPairingError(
            "mixed rational/irrational pairs have no exact certificate search"
        )
    if kind in _NEED_IRRATIONAL and ra:
        raise UnsupportedPairingError(
            f"{kind.value} certificates require two irrational slopes"
        )
    if kind is CertKind.FACT_F_PRIME and not ra:
        raise UnsupportedPairingError(
            "fact_f_prime certificates are about rational slopes"
        )


def certificate_search(kind: CertKind, alpha, beta, bound: int = 10**6):
    """Search for the integer relation certifying `kind`, or None.

    The defining relation of any returned certificate is re-verified
    exactly before it is handed back.
    """
    alpha, beta = _positive(alpha), _positive(beta)
    if compare(alpha, 1) <= 0 or compare(beta, 1) <= 0:
        raise DomainError("certificates are about slopes > 1")
    kind = CertKind(kind)
    _check_pairing(kind, alpha, beta)
    if kind is CertKind.PARTITION:
        total = 1 / alpha + 1 / beta
        if compare(total, 1) != 0:
            return None
        cert = Certificate(kind, 1, 1, 1)
    else:
        solved = linear_relation_solve(alpha, beta, _KIND_FORM[kind], bound)
        if solved is None:
            return None
        cert = Certificate(kind, *solved)
    if not verify_certificate(cert, alpha, beta):
        raise AssertionError(f"solver produced a non-verifying certificate {cert}")
    return cert


def _relation_value(cert: Certificate, alpha: ExactReal, beta: ExactReal) -> ExactReal:
    inv_a, inv_b = 1 / alpha, 1 / beta
    k = cert.kind
    if k in (CertKind.DISJOINT, CertKind.FACT_C, CertKind.FACT_D):
        return cert.a * inv_a + cert.b * inv_b
    if k is CertKind.COVER:
        return cert.a * (1 - inv_a) + cert.b * (1 - inv_b)
    if k in (CertKind.SUBSET, CertKind.FACT_F_PRIME):
        return cert.a * inv_a + cert.b * (1 - inv_b)
    if k is CertKind.PARTITION:
        return inv_a + inv_b
    raise DomainError(f"unknown certificate kind {k}")


def verify_certificate(cert: Certificate, alpha, beta) -> bool:
    """Does the certificate's defining relation hold exactly, with its
    sign/coprimality side conditions?"""
    alpha, beta = ensure_exact(alpha), ensure_exact(beta)
    value = _relation_value(cert, alpha, beta)
    k = cert.kind
    if k is CertKind.FACT_C:
        return (
            cert.a * cert.b < 0
            and cert.c != 0
            and compare(value, cert.c) == 0
        )
    if k is CertKind.FACT_D:
        return (
            cert.a > 0
            and cert.b > 0
            and cert.c > 1
            and gcd(gcd(cert.a, cert.b), cert.c) == 1
            and compare(value, cert.c) == 0
        )
    return cert.a > 0 and cert.b > 0 and cert.c == 1 and compare(value, 1) == 0


@dataclass(frozen=True)
class ImplicationReport:
    ok: bool
    kind: CertKind
    checked_to: int
    violation: Optional[str] = None


def verify_implication(kind, alpha, beta, cert: Certificate, bound: int) -> ImplicationReport:
    """Check the set relation a certificate implies, over [0, bound].

    A FAIL here never means the mathematics is wrong; it flags an
    implementation bug, which is exactly why the check exists.
    """
    kind = CertKind(kind)
    alpha, beta = _positive(alpha), _positive(beta)
    if not verify_certificate(cert, alpha, beta):
        raise InvalidCertificateError(
            f"certificate {cert} does not hold for the given pair"
        )
    in_a = window(alpha, bound).member_set()
    in_b = window(beta, bound).member_set()
    violation = None
    if kind in (CertKind.DISJOINT, CertKind.PARTITION):
        shared = sorted((in_a & in_b) - {0})
        if shared:
            violation = f"{shared[0]} is in both sequences"
    if violation is None and kind in (CertKind.COVER, CertKind.PARTITION):
        missing = sorted(set(range(1, bound + 1)) - (in_a | in_b))
        if missing:
            violation = f"{missing[0]} is in neither sequence"
    if violation is None and kind in (CertKind.SUBSET, CertKind.FACT_F_PRIME):
        extra = sorted(in_a - in_b)
        if extra:
            violation = f"{extra[0]} is in the first sequence only"
    if violation is None and kind in (CertKind.FACT_C, CertKind.FACT_D):
        if not (in_a & in_b) - {0}:
            violation = f"no common element in [1, {bound}]"
    return ImplicationReport(violation is None, kind, bound, violation)


# -- intersection and density probes -----------------------------------


@dataclass(frozen=True)
class CommonScan:
    found: tuple[int, ...]
    exhausted: bool
    scanned_to: int


def _terms(alpha: ExactReal) -> Iterator[int]:
    """Strictly increasing stream of sequence values, starting at index 1."""
    n = 1
    last = None
    while True:
        v = floor_of(alpha * n)
        if v != last:
            yield v
            last = v
        n += 1


def common_elements(alpha, beta, start: int, count: int,
                    *, limit: int = DEFAULT_SCAN_LIMIT) -> CommonScan:
    """First `count` shared values above `start`, by synchronized scan.

    Stops once candidate values pass `limit`; an unfilled result then
    carries exhausted=True rather than failing silently.
    """
    alpha, beta = _positive(alpha), _positive(beta)
    if count < 0 or start < 0:
        raise DomainError("need start >= 0 and count >= 0")
    found = []
    gen_a, gen_b = _terms(alpha), _terms(beta)
    va, vb = next(gen_a), next(gen_b)
    while len(found) < count:
        if va > limit and vb > limit:
            return CommonScan(tuple(found), True, limit)
        if va == vb:
            if va > start:
                found.append(va)
            va, vb = next(gen_a), next(gen_b)
        elif va < vb:
            va = next(gen_a)
        else:
            vb = next(gen_b)
    return CommonScan(tuple(found), False, min(va, vb))


def dmo_window_search(alpha, lo, hi, limit: int) -> Optional[int]:
    """Least n <= limit with lo < frac(n*alpha) < hi, comparisons exact."""
    alpha = _positive(alpha)
    lo, hi = Fraction(lo), Fraction(hi)
    if not (0 <= lo < hi <= 1):
        raise DomainError("need 0 <= lo < hi <= 1")
    if is_rational(alpha):
        raise RationalInputError("fractional-part searches need irrational alpha")
    for n in range(1, limit + 1):
        f = frac_of(alpha * n)
        if compare(f, lo) > 0 and compare(f, hi) < 0:
            return n
    return None


def residue_search(alpha, modulus: int, residue: int, limit: int) -> Optional[int]:
    """Least n <= limit with floor(n*m*alpha) = residue (mod m)."""
    alpha = _positive(alpha)
    if is_rational(alpha):
        raise RationalInputError("residue searches need irrational alpha")
    if not 0 <= residue < modulus:
        raise DomainError("need 0 <= residue < modulus")
    scaled = alpha * modulus
    for n in range(1, limit + 1):
        if floor_of(scaled * n) % modulus == residue:
            return n
    return None


def _int_nth_root(x: int, n: int) -> int:
    """Largest u >= 0 with u**n <= x."""
    if x < 0:
        raise DomainError("negative radicand")
    if x == 0:
        return 0
    hi = 1 << (x.bit_length() // n + 1)
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**n <= x:
            lo = mid
        else:
            hi = mid
    return lo


def pth_root_dmo_witness(p: int, lo, hi) -> tuple[int, int]:
    """Integers (M, n) with lo < M**(1/p) - n < hi, verified by p-th powers.

    Scans n upward; the interval ((n+lo)^p, (n+hi)^p) is guaranteed to
    contain an integer once n exceeds the (p-1)-th root of t/p for the
    mesh denominator t, so termination is certain.
    """
    if p < 2:
        raise DomainError("root degree must be >= 2")
    lo, hi = Fraction(lo), Fraction(hi)
    if not (0 <= lo < hi < 1):
        raise DomainError("need 0 <= lo < hi < 1")
    t = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
    n_stop = _int_nth_root(t // p + 1, p - 1) + 2
    for n in range(1, n_stop + 1):
        low_pow = (n + lo) ** p
        high_pow = (n + hi) ** p
        m = low_pow.numerator // low_pow.denominator + 1
        if Fraction(m) > low_pow and Fraction(m) < high_pow:
            return m, n
    raise AssertionError("no witness below the guaranteed-termination bound")


def kronecker_search(alpha, beta, rect, limit: int) -> Optional[int]:
    """Least n <= limit with frac(n*alpha) in (l1, r1) and frac(n*beta)
    in (l2, r2)."""
    alpha, beta = _positive(alpha), _positive(beta)
    if is_rational(alpha) or is_rational(beta):
        raise RationalInputError("fractional-part searches need irrationals")
    l1, r1, l2, r2 = (Fraction(x) for x in rect)
    if not (0 <= l1 < r1 <= 1 and 0 <= l2 < r2 <= 1):
        raise DomainError("rectangle sides must satisfy 0 <= l < r <= 1")
    for n in range(1, limit + 1):
        fa = frac_of(alpha * n)
        if compare(fa, l1) > 0 and compare(fa, r1) < 0:
            fb = frac_of(beta * n)
            if compare(fb, l2) > 0 and compare(fb, r2) < 0:
                return n
    return None


def agreement_radius(rho, m: int) -> Fraction:
    """Perturbation radius below which windows cannot change under m.

    For rational rho = p/q, round m up to the least multiple m' of q and
    return 1/m'^2: any alpha with 0 < alpha - rho < 1/m'^2 produces the
    same window below m.
    """
    rho = Fraction(rho)
    if rho <= 1:
        raise DomainError("agreement radius is about rational slopes > 1")
    if m < 1:
        raise DomainError("need m >= 1")
    q = rho.denominator
    mprime = m if m % q == 0 else (m // q + 1) * q
    return Fraction(1, mprime * mprime)


HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Claim51Report:
    status: str
    m: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    separator: Optional[int] = None
    details: dict = field(default_factory=dict)


def claim51_check(rho, beta) -> Claim51Report:
    """Empirical probe of the open separation configuration.

    Applicable when beta is irrational, 1 < beta < rho < 2 and
    t = (m+1)*rho/(rho-1) is an integer for m = floor((beta-1)(rho-1)/(rho-beta)).
    The probe then evaluates whether t + 1 = floor((k+1)*rho) separates
    the two sequences, with k = (m+1)/(rho-1).  Nothing is assumed:
    every membership is re-derived and the report says what happened.
    """
    rho = Fraction(rho)
    beta = ensure_exact(beta)
    if is_rational(beta):
        return Claim51Report(NOT_APPLICABLE, details={"reason": "beta is rational"})
    if not (1 < rho < 2) or compare(beta, 1) <= 0 or compare(beta, rho) >= 0:
        return Claim51Report(
            NOT_APPLICABLE, details={"reason": "need 1 < beta < rho < 2"}
        )
    m = floor_of((beta - 1) * (rho - 1) / (rho - beta))
    t_exact = (m + 1) * rho / (rho - 1)
    if t_exact.denominator != 1:
        return Claim51Report(
            NOT_APPLICABLE, m=m,
            details={"reason": "(m+1)*rho/(rho-1) is not an integer"},
        )
    t = int(t_exact)
    k = t - (m + 1)  # equals (m+1)/(rho-1), integral whenever t is
    x = t + 1
    floor_next = floor_of(rho * (k + 1))
    in_rho = member(rho, x)
    in_beta = member(beta, x)
    ok = floor_next == x and in_rho is not None and in_beta is None
    details = {
        "floor_(k+1)rho": floor_next,
        "member_rho": in_rho,
        "member_beta": in_beta,
    }
    return Claim51Report(HOLDS if ok else FAILS, m, t, k, x if ok else None, details)
