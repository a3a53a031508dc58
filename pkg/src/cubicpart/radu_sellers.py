"""Quantities for the Radu--Sellers finite verification bound.

Given ``(m, M, N, t, r)`` and a companion exponent vector ``r'`` on the
divisors of ``N``, a congruence ``c_r(m n + t') = 0 (mod u)`` for every ``t'`` in
the orbit of ``t`` follows from checking ``n <= floor(v)``, provided
``p_{m,r}(gamma) + p*_{r'}(gamma) >= 0`` at each double-coset representative.

All rationals are :class:`fractions.Fraction`, always in lowest terms.
Membership of the tuple in Radu's admissible set is *not* checked here; a
tuple only records that it was asserted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .series import EtaQuotientSpec

__all__ = [
    "GammaMatrix",
    "HypothesisReport",
    "RSTuple",
    "check_hypotheses",
    "divisors",
    "index_gamma0",
    "kappa",
    "orbit",
    "p_mr",
    "p_star",
    "prime_factors",
    "representatives",
    "square_classes",
    "v_bound",
    "v_bound_termwise",
    "weighted_exponent_sum",
]


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct primes dividing ``n``, ascending."""
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


@dataclass(frozen=True)
class GammaMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")


@dataclass(frozen=True)
class RSTuple:
    m: int
    M: int
    N: int
    t: int
    r: EtaQuotientSpec
    r_prime: EtaQuotientSpec
    asserted_delta_star: bool = True

    def __post_init__(self):
        for name in ("m", "M", "N"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.t < self.m:
            raise ValueError(f"t={self.t} is not in [0, {self.m})")
        for d, _ in self.r.terms:
            if self.M % d:
                raise ValueError(f"r uses delta={d}, which does not divide M={self.M}")
        for d, _ in self.r_prime.terms:
            if self.N % d:
                raise ValueError(f"r' uses delta={d}, which does not divide N={self.N}")

    def with_t(self, t: int) -> RSTuple:
        return RSTuple(self.m, self.M, self.N, t, self.r, self.r_prime, self.asserted_delta_star)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "M": self.M,
            "N": self.N,
            "t": self.t,
            "r": str(self.r),
            "r_prime": str(self.r_prime),
            "asserted_delta_star": self.asserted_delta_star,
        }

    @classmethod
    def from_json(cls, data: dict) -> RSTuple:
        from .series import parse_eta_spec

        return cls(
            m=int(data["m"]),
            M=int(data["M"]),
            N=int(data["N"]),
            t=int(data["t"]),
            r=parse_eta_spec(data["r"], level=int(data["M"])),
            r_prime=parse_eta_spec(data["r_prime"], level=int(data["N"])),
            asserted_delta_star=bool(data.get("asserted_delta_star", True)),
        )


def kappa(m: int) -> int:
    return math.gcd(m * m - 1, 24)


def index_gamma0(N: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): ``N * prod_{p | N} (1 + 1/p)``."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    value = Fraction(N)
    for p in prime_factors(N):
        value *= 1 + Fraction(1, p)
    assert value.denominator == 1
    return int(value)


def square_classes(modulus: int) -> list[int]:
    """Sorted squares of the units modulo ``modulus``."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if modulus == 1:
        return [0]
    return sorted({x * x % modulus for x in range(1, modulus) if math.gcd(x, modulus) == 1})


def weighted_exponent_sum(r: EtaQuotientSpec) -> int:
    return sum(d * e for d, e in r.terms)


def orbit(tup: RSTuple) -> list[int]:
    """All residues ``t s + (s-1)/24 * sum(d r_d) mod m`` over square classes ``s`` mod 24m."""
    m = tup.m
    w = weighted_exponent_sum(tup.r)
    out = set()
    for s in square_classes(24 * m):
        if (s - 1) % 24:
            raise AssertionError(f"square class {s} mod {24 * m} is not 1 mod 24")
        out.add((tup.t * s + (s - 1) // 24 * w) % m)
    return sorted(out)


def p_mr(gamma: GammaMatrix, m: int, r: EtaQuotientSpec, lambdas=None) -> Fraction:
    """Minimum over ``lambda`` of ``1/24 sum r_d gcd^2(d (a + kappa lambda c), m c) / (d m)``.

    ``lambdas`` defaults to the full range ``0..m-1``.
    """
    a, c = gamma.a, gamma.c
    k = kappa(m)
    if lambdas is None:
        lambdas = range(m)
    best = None
    for lam in lambdas:
        x = a + k * lam * c
        total = sum((Fraction(e * math.gcd(d * x, m * c) ** 2, d * m) for d, e in r.terms), Fraction(0))
        if best is None or total < best:
            best = total
    return best / 24


def p_star(gamma: GammaMatrix, r_prime: EtaQuotientSpec) -> Fraction:
    """``1/24 sum r'_d gcd^2(d, c) / d``."""
    c = gamma.c
    return sum((Fraction(e * math.gcd(d, c) ** 2, d) for d, e in r_prime.terms), Fraction(0)) / 24


def representatives(N: int) -> list[GammaMatrix]:
    """``[[1, 0], [d, 1]]`` for each divisor ``d`` of ``N``, ascending."""
    return [GammaMatrix(1, 0, d, 1) for d in divisors(N)]


@dataclass(frozen=True)
class HypothesisRow:
    delta: int
    p_mr: Fraction
    p_star: Fraction

    @property
    def total(self) -> Fraction:
        return self.p_mr + self.p_star

    @property
    def ok(self) -> bool:
        return self.total >= 0


@dataclass(frozen=True)
class HypothesisReport:
    rows: tuple[HypothesisRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def __len__(self):
        return len(self.rows)


def check_hypotheses(tup: RSTuple) -> HypothesisReport:
    """Evaluate ``p_mr + p_star`` at every representative ``gamma_d``, ``d | N``."""
    rows = []
    for gamma in representatives(tup.N):
        rows.append(HypothesisRow(gamma.c, p_mr(gamma, tup.m, tup.r), p_star(gamma, tup.r_prime)))
    return HypothesisReport(tuple(rows))


def v_bound(tup: RSTuple) -> tuple[Fraction, int]:
    """The bound ``v`` and ``floor(v)``, with ``t_min`` the smallest orbit member."""
    t_min = min(orbit(tup))
    sum_r = sum(e for _, e in tup.r.terms)
    sum_rp = sum(e for _, e in tup.r_prime.terms)
    numer = (sum_r + sum_rp) * index_gamma0(tup.N) - weighted_exponent_sum(tup.r_prime)
    v = (
        Fraction(numer, 24)
        - Fraction(weighted_exponent_sum(tup.r), 24 * tup.m)
        - Fraction(t_min, tup.m)
    )
    return v, math.floor(v)


def v_bound_termwise(tup: RSTuple) -> Fraction:
    """``v`` assembled over a single common denominator ``24 m``, term by term.

    Independent of :func:`v_bound`'s grouping; both must give the same fraction.
    """
    t_min = min(orbit(tup))
    m = tup.m
    idx = index_gamma0(tup.N)
    numer = 0
    for _, e in tup.r.terms:
        numer += e * idx * m
    for d, e in tup.r_prime.terms:
        numer += e * idx * m - d * e * m
    for d, e in tup.r.terms:
        numer -= d * e
    numer -= 24 * t_min
    return Fraction(numer, 24 * m)
