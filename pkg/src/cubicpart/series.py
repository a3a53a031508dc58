"""Truncated formal power series with exact coefficients.

Two coefficient domains are supported:

* :class:`IntegerSeries` -- arbitrary-precision integers (plain Python ints).
* :class:`ResidueSeries` -- residues modulo ``u``; multiplication and division
  go through the kernels chosen in :mod:`cubicpart._backend`.

Every series carries its truncation order ``N`` and holds the coefficients of
``q**0 .. q**N``. Binary operations on series of different orders truncate to
the smaller order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _backend, _pykernels

__all__ = [
    "EtaQuotientSpec",
    "IntegerSeries",
    "NonUnitError",
    "ResidueSeries",
    "euler_factor",
    "expand",
    "expand_mod",
    "expand_reference",
    "invert",
    "mul",
    "parse_eta_spec",
    "pentagonal_terms",
    "pow_",
    "reduce",
    "theta_signed",
]


class NonUnitError(ValueError):
    """The constant term of a series is not a unit, so it has no reciprocal."""


@dataclass(frozen=True)
class IntegerSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def one(cls, order: int) -> IntegerSeries:
        return cls((1,) + (0,) * order)

    @classmethod
    def zero(cls, order: int) -> IntegerSeries:
        return cls((0,) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> IntegerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return IntegerSeries(self.coeffs[: order + 1])

    def __add__(self, other: IntegerSeries) -> IntegerSeries:
        n = min(self.order, other.order) + 1
        return IntegerSeries(tuple(x + y for x, y in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other: IntegerSeries) -> IntegerSeries:
        return self + (-other)

    def __neg__(self) -> IntegerSeries:
        return IntegerSeries(tuple(-x for x in self.coeffs))

    def scale(self, k: int) -> IntegerSeries:
        return IntegerSeries(tuple(k * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntegerSeries:
        return pow_(self, e)

    def __repr__(self):
        return f"IntegerSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


@dataclass(frozen=True)
class ResidueSeries:
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("residue coefficients must lie in [0, modulus)")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: ResidueSeries) -> None:
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: ResidueSeries) -> ResidueSeries:
        self._check(other)
        u = self.modulus
        return ResidueSeries(u, tuple((x + y) % u for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: ResidueSeries) -> ResidueSeries:
        self._check(other)
        order = min(self.order, other.order)
        return ResidueSeries(self.modulus, _kernels_for(self.modulus).mul_mod(self.coeffs, other.coeffs, order, self.modulus))

    def __truediv__(self, other: ResidueSeries) -> ResidueSeries:
        self._check(other)
        u = self.modulus
        try:
            b0_inv = pow(other.coeffs[0], -1, u)
        except ValueError:
            raise NonUnitError(f"constant term {other.coeffs[0]} is not invertible mod {u}") from None
        order = min(self.order, other.order)
        return ResidueSeries(u, _kernels_for(u).div_mod(self.coeffs, other.coeffs, order, u, b0_inv))

    def invert(self) -> ResidueSeries:
        one = ResidueSeries(self.modulus, (1,) + (0,) * self.order)
        return one / self

    def __pow__(self, e: int) -> ResidueSeries:
        if e < 0:
            return self.invert() ** (-e)
        result = ResidueSeries(self.modulus, (1,) + (0,) * self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return f"ResidueSeries(modulus={self.modulus}, order={self.order}, coeffs={list(self.coeffs)!r})"


def _kernels_for(u: int):
    return _backend.kernels if u <= _backend.MAX_MODULUS else _pykernels


@dataclass(frozen=True)
class EtaQuotientSpec:
    """The product of ``(q^d; q^d)_inf ** r_d`` over the stored ``(d, r_d)`` pairs.

    ``terms`` is kept sorted by ``d`` with nonzero exponents only; ``level`` is
    a common multiple of every ``d`` (the least one unless given explicitly).
    """

    terms: tuple[tuple[int, int], ...]
    level: int

    def __post_init__(self):
        deltas = [d for d, _ in self.terms]
        if len(set(deltas)) != len(deltas):
            raise ValueError("repeated divisor in eta-quotient spec")
        for d, r in self.terms:
            if d < 1:
                raise ValueError(f"divisor must be positive, got {d}")
            if r == 0:
                raise ValueError(f"exponent for divisor {d} is zero")
            if self.level % d:
                raise ValueError(f"{d} does not divide the level {self.level}")
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    @classmethod
    def from_mapping(cls, exponents: Mapping[int, int], level: int | None = None) -> EtaQuotientSpec:
        """Build a spec; zero exponents are dropped but still count toward the level."""
        if level is None:
            level = math.lcm(*exponents) if exponents else 1
        return cls(tuple((d, r) for d, r in exponents.items() if r != 0), level)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __str__(self):
        return ",".join(f"{d}:{r}" for d, r in self.terms)


def parse_eta_spec(text: str, level: int | None = None) -> EtaQuotientSpec:
    """Parse ``"1:10, 2:-1, 11:-1"`` into an :class:`EtaQuotientSpec`."""
    text = "".join(text.split())
    exponents: dict[int, int] = {}
    if text:
        for item in text.split(","):
            try:
                d, r = item.split(":")
                d, r = int(d), int(r)
            except ValueError:
                raise ValueError(f"malformed eta term {item!r}; expected delta:exponent") from None
            if d in exponents:
                raise ValueError(f"divisor {d} listed twice")
            exponents[d] = r
    return EtaQuotientSpec.from_mapping(exponents, level)


def pentagonal_terms(limit: int) -> list[tuple[int, int]]:
    """``(g, sign)`` for generalized pentagonal ``g <= limit``, in increasing order.

    ``(q;q)_inf = sum sign * q**g``, with ``g = j(3j-1)/2, j(3j+1)/2`` and
    ``sign = (-1)**j``.
    """
    out = [(0, 1)]
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > limit:
            break
        sign = -1 if j & 1 else 1
        out.append((g1, sign))
        g2 = g1 + j
        if g2 <= limit:
            out.append((g2, sign))
        j += 1
    return out


def euler_factor(delta: int, order: int) -> IntegerSeries:
    """``(q^delta; q^delta)_inf`` truncated at ``order``."""
    if delta < 1:
        raise ValueError(f"delta must be positive, got {delta}")
    coeffs = [0] * (order + 1)
    for g, sign in pentagonal_terms(order // delta):
        coeffs[delta * g] = sign
    return IntegerSeries(tuple(coeffs))


def _mul_ints(a, b, order):
    # Iterates over the nonzero entries of ``a``: pass the sparse operand first.
    acc = [0] * (order + 1)
    lb = min(len(b), order + 1)
    for i in range(min(len(a), order + 1)):
        x = a[i]
        if not x:
            continue
        for j in range(min(lb, order - i + 1)):
            acc[i + j] += x * b[j]
    return acc


def _div_ints(a, b, order):
    b0 = b[0]
    if b0 not in (1, -1):
        raise NonUnitError(f"constant term {b0} is not a unit over the integers")
    terms = [(j, b[j]) for j in range(1, min(len(b), order + 1)) if b[j]]
    c = [0] * (order + 1)
    la = len(a)
    for n in range(order + 1):
        s = a[n] if n < la else 0
        for j, v in terms:
            if j > n:
                break
            s -= v * c[n - j]
        c[n] = s * b0
    return c


def mul(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    """Exact Cauchy product, truncated at ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    if sum(1 for x in b.coeffs if x) < sum(1 for x in a.coeffs if x):
        a, b = b, a
    return IntegerSeries(tuple(_mul_ints(a.coeffs, b.coeffs, order)))


def divide(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    """Exact quotient ``a / b``; ``b`` must have constant term +1 or -1."""
    order = min(a.order, b.order)
    return IntegerSeries(tuple(_div_ints(a.coeffs, b.coeffs, order)))


def invert(a: IntegerSeries) -> IntegerSeries:
    """Reciprocal of a series whose constant term is +1 or -1.

    Raises :class:`NonUnitError` for any other constant term.
    """
    return divide(IntegerSeries.one(a.order), a)


def pow_(a: IntegerSeries, e: int) -> IntegerSeries:
    """``a ** e`` by repeated squaring; negative ``e`` inverts first."""
    if e < 0:
        return pow_(invert(a), -e)
    result = IntegerSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def expand(spec: EtaQuotientSpec, order: int) -> IntegerSeries:
    """Integer expansion of the eta-quotient-style product up to ``q**order``.

    Each factor is applied as ``|r|`` sparse multiplications or divisions by
    the pentagonal expansion, costing O(order**1.5) per step instead of a
    dense convolution.
    """
    coeffs = [1] + [0] * order
    for delta, r in spec.terms:
        e = euler_factor(delta, order).coeffs
        for _ in range(abs(r)):
            coeffs = _mul_ints(e, coeffs, order) if r > 0 else _div_ints(coeffs, e, order)
    return IntegerSeries(tuple(coeffs))


def expand_reference(spec: EtaQuotientSpec, order: int) -> IntegerSeries:
    """Same series as :func:`expand`, built literally as a product of powers.

    Negative exponents invert the Euler factor and then raise it to a power;
    all products are dense. Slow, kept as an independent route for checks.
    """
    result = IntegerSeries.one(order)
    for delta, r in spec.terms:
        result = mul(result, pow_(euler_factor(delta, order), r))
    return result


def expand_mod(spec: EtaQuotientSpec, order: int, u: int) -> ResidueSeries:
    """Residue expansion modulo ``u``; the fast path for congruence checks."""
    if u < 2:
        raise ValueError(f"modulus must be >= 2, got {u}")
    k = _kernels_for(u)
    coeffs = [1] + [0] * order
    for delta, r in spec.terms:
        e = [c % u for c in euler_factor(delta, order).coeffs]
        for _ in range(abs(r)):
            if r > 0:
                coeffs = k.mul_mod(e, coeffs, order, u)
            else:
                coeffs = k.div_mod(coeffs, e, order, u, 1)
    return ResidueSeries(u, tuple(coeffs))


def theta_signed(order: int) -> IntegerSeries:
    """``1 + 2 * sum_{n>=1} (-q)**(n*n)`` truncated at ``order``."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= order:
        coeffs[n * n] = -2 if n & 1 else 2
        n += 1
    return IntegerSeries(tuple(coeffs))


def reduce(a: IntegerSeries | Iterable[int], u: int) -> ResidueSeries:
    """Reduce every coefficient into ``[0, u)``."""
    if u < 2:
        raise ValueError(f"modulus must be >= 2, got {u}")
    coeffs = a.coeffs if isinstance(a, IntegerSeries) else tuple(a)
    return ResidueSeries(u, tuple(c % u for c in coeffs))
