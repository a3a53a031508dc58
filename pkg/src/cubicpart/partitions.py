"""Partition counts, divisor sums and the theta-series split of p2.

``p(n)`` is the ordinary partition function. ``p_k(n)`` counts two-colour
partitions in which the second colour may only be used on parts divisible by
``k``; its generating function is ``1 / ((q;q)_inf (q^k;q^k)_inf)``, and
``p_2`` is the cubic partition function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import EtaQuotientSpec, euler_factor, expand, invert, pentagonal_terms, theta_signed

__all__ = [
    "P_METHODS",
    "PK_METHODS",
    "InexactDivisionError",
    "PartitionTable",
    "SplitWitness",
    "chan_split",
    "p_table",
    "pk_table",
    "pk_sigma_recursion",
    "pk_spec",
    "sigma",
    "sigma_k",
    "sigma_table",
    "theta_decomposition_p2",
]

P_METHODS = ("pentagonal", "ford", "eta-expansion")
PK_METHODS = ("convolution", "eta-expansion", "sigma-recursion")


class InexactDivisionError(ArithmeticError):
    """An exact division inside a recursion left a remainder."""


@dataclass(frozen=True)
class PartitionTable:
    kind: str  # "ordinary" or "k-colored-evens"
    k: int | None
    method: str
    values: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    if n < 1:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
        d += 1
    return total


def sigma_k(k: int, n: int) -> int:
    """Divisor sum of ``n`` where each divisor that is a multiple of ``k`` counts twice.

    >>> sigma_k(2, 4)
    13
    """
    if k < 1 or n < 1:
        raise ValueError(f"sigma_k needs k, n >= 1, got k={k}, n={n}")
    s = sigma(n)
    if n % k == 0:
        s += k * sigma(n // k)
    return s


def sigma_table(limit: int) -> list[int]:
    """``[0, sigma(1), ..., sigma(limit)]`` by a divisor sieve."""
    table = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            table[multiple] += d
    return table


def _exact_div(total: int, n: int, what: str) -> int:
    q, rem = divmod(total, n)
    if rem:
        raise InexactDivisionError(f"{what}: sum {total} at n={n} is not divisible by n")
    return q


@lru_cache(maxsize=None)
def _pentagonal_values(order: int) -> tuple[int, ...]:
    terms = pentagonal_terms(order)[1:]
    p = [1] + [0] * order
    for n in range(1, order + 1):
        s = 0
        for g, sign in terms:
            if g > n:
                break
            s -= sign * p[n - g]
        p[n] = s
    return tuple(p)


def _ford_values(order: int) -> tuple[int, ...]:
    sig = sigma_table(order)
    p = [1] + [0] * order
    for n in range(1, order + 1):
        total = sum(sig[m] * p[n - m] for m in range(1, n + 1))
        p[n] = _exact_div(total, n, "Ford recursion")
    return tuple(p)


def p_table(order: int, method: str = "pentagonal") -> PartitionTable:
    """``p(0..order)`` computed by ``pentagonal``, ``ford`` or ``eta-expansion``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if method == "pentagonal":
        values = _pentagonal_values(order)
    elif method == "ford":
        values = _ford_values(order)
    elif method == "eta-expansion":
        values = invert(euler_factor(1, order)).coeffs
    else:
        raise ValueError(f"unknown method {method!r}; choose from {P_METHODS}")
    return PartitionTable("ordinary", None, method, tuple(values))


def pk_sigma_recursion(k: int, order: int) -> PartitionTable:
    """``p_k(0..order)`` from ``n p_k(n) = sum_{m=1..n} sigma_k(m) p_k(n-m)``.

    Every division by ``n`` is checked to be exact.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    sig = sigma_table(order)
    sk = [sig[m] + (k * sig[m // k] if m % k == 0 else 0) for m in range(order + 1)]
    values = [1] + [0] * order
    for n in range(1, order + 1):
        total = sum(sk[m] * values[n - m] for m in range(1, n + 1))
        values[n] = _exact_div(total, n, f"sigma^({k}) recursion")
    return PartitionTable("k-colored-evens", k, "sigma-recursion", tuple(values))


def pk_table(k: int, order: int, method: str = "convolution") -> PartitionTable:
    """``p_k(0..order)`` by ``convolution``, ``eta-expansion`` or ``sigma-recursion``.

    The convolution route uses ``p_k(n) = sum_{i + k j = n} p(i) p(j)``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if method == "convolution":
        p = _pentagonal_values(order)
        values = tuple(
            sum(p[n - k * j] * p[j] for j in range(n // k + 1)) for n in range(order + 1)
        )
    elif method == "eta-expansion":
        values = expand(EtaQuotientSpec.from_mapping(_pk_exponents(k)), order).coeffs
    elif method == "sigma-recursion":
        return pk_sigma_recursion(k, order)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {PK_METHODS}")
    return PartitionTable("k-colored-evens", k, method, values)


def _pk_exponents(k: int) -> dict[int, int]:
    return {1: -2} if k == 1 else {1: -1, k: -1}


def pk_spec(k: int) -> EtaQuotientSpec:
    """Eta-quotient spec whose expansion is the generating function of ``p_k``."""
    return EtaQuotientSpec.from_mapping(_pk_exponents(k))


def theta_decomposition_p2(n: int) -> int:
    """``sum s(m^2) p(i) p(j) p(k)`` over ``m^2 + i + j + k = n``; equals ``p_2(n)``.

    ``s(m^2)`` is read off the signed theta series, so only square indices
    ever contribute.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = theta_signed(n).coeffs
    p = _pentagonal_values(n)
    # p3[x] = sum_{i+j+k=x} p(i) p(j) p(k)
    p2 = [sum(p[i] * p[x - i] for i in range(x + 1)) for x in range(n + 1)]
    p3 = [sum(p[i] * p2[x - i] for i in range(x + 1)) for x in range(n + 1)]
    total = 0
    m = 0
    while m * m <= n:
        total += s[m * m] * p3[n - m * m]
        m += 1
    return total


@dataclass(frozen=True)
class SplitWitness:
    """Chan's 6/3 split of ``p_2(3n+2)``.

    ``a`` sums over quadruples with ``i > j > k``; ``b`` over ``i = j != k``.
    ``triple_equal`` counts quadruples with ``i = j = k`` (always zero).
    """

    n: int
    a: int
    b: int
    triple_equal: int
    p2_value: int

    @property
    def total(self) -> int:
        return 6 * self.a + 3 * self.b


def chan_split(n: int) -> SplitWitness:
    """Enumerate ``m^2 + i + j + k = 3n + 2`` and split ``p_2(3n+2) = 6A + 3B``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    target = 3 * n + 2
    s = theta_signed(target).coeffs
    p = _pentagonal_values(target)
    a = b = triple_equal = 0
    m = 0
    while m * m <= target:
        weight = s[m * m]
        rest = target - m * m
        for k in range(rest // 3 + 1):
            for j in range(k + 1, (rest - k) // 2 + 1):
                i = rest - j - k
                if i > j:
                    a += weight * p[i] * p[j] * p[k]
        for i in range(rest // 2 + 1):
            k = rest - 2 * i
            if k != i:
                b += weight * p[i] * p[i] * p[k]
        if rest % 3 == 0:
            triple_equal += 1
        m += 1
    p2_value = pk_table(2, target).values[target]
    witness = SplitWitness(n, a, b, triple_equal, p2_value)
    if witness.total != p2_value:
        raise AssertionError(f"6A+3B = {witness.total} but p2({target}) = {p2_value}")
    return witness
