"""Congruence checks on arithmetic progressions and their certificates.

A claim says ``c(m n + t) = 0 (mod u)`` for the coefficients ``c`` of a
series. :func:`verify_progression` checks it for ``n <= n_max`` in the residue
ring and returns a :class:`CongruenceCertificate`. When the claim carries a
Radu--Sellers tuple, the certificate is ``lemma-complete`` only if the orbit,
the hypothesis sums and the ``floor(v)``-depth check all pass; otherwise it is
``empirical``.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Union

from . import partitions
from .radu_sellers import RSTuple, check_hypotheses, orbit, v_bound
from .series import EtaQuotientSpec, expand, expand_mod, parse_eta_spec, reduce

__all__ = [
    "CERTIFICATE_SCHEMA",
    "CongruenceCertificate",
    "CongruenceClaim",
    "IdentityReport",
    "PartitionFamily",
    "THEOREM_TUPLES",
    "certificate_from_json",
    "claim_fingerprint",
    "coefficients_mod",
    "scan",
    "theorem_claims",
    "verify_chan_identity",
    "verify_mod11_reduction",
    "verify_progression",
]

CERTIFICATE_SCHEMA = "cubicpart.certificate/1"


@dataclass(frozen=True)
class PartitionFamily:
    """``p_k``: two-colour partitions, second colour only on multiples of ``k``."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")

    def spec(self) -> EtaQuotientSpec:
        return partitions.pk_spec(self.k)

    def __str__(self):
        return f"p{self.k}"


SeriesSource = Union[EtaQuotientSpec, PartitionFamily]


def source_to_json(source: SeriesSource) -> dict:
    if isinstance(source, PartitionFamily):
        return {"family": "k-colored-evens", "k": source.k}
    return {"eta": str(source), "level": source.level}


def source_from_json(data: dict) -> SeriesSource:
    if "family" in data:
        if data["family"] != "k-colored-evens":
            raise ValueError(f"unknown family {data['family']!r}")
        return PartitionFamily(int(data["k"]))
    return parse_eta_spec(data["eta"], level=data.get("level"))


def _spec_of(source: SeriesSource) -> EtaQuotientSpec:
    return source.spec() if isinstance(source, PartitionFamily) else source


def coefficients_mod(source: SeriesSource, u: int, order: int) -> tuple[int, ...]:
    """Residues of ``c(0..order)`` modulo ``u``."""
    return expand_mod(_spec_of(source), order, u).coeffs


@dataclass(frozen=True)
class CongruenceClaim:
    source: SeriesSource
    modulus: int
    m: int
    t: int
    n_max: int
    bound_basis: RSTuple | None = None

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not 0 <= self.t < self.m:
            raise ValueError(f"t={self.t} is not in [0, {self.m})")
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        if self.bound_basis is not None:
            b = self.bound_basis
            if (b.m, b.t) != (self.m, self.t):
                raise ValueError("bound tuple progression differs from the claim")
            floor_v = v_bound(b)[1]
            if self.n_max < floor_v:
                raise ValueError(f"n_max={self.n_max} is below floor(v)={floor_v}")

    @property
    def max_index(self) -> int:
        return self.m * self.n_max + self.m - 1

    def to_json(self) -> dict:
        return {
            "source": source_to_json(self.source),
            "modulus": self.modulus,
            "m": self.m,
            "t": self.t,
            "n_max": self.n_max,
            "bound_basis": None if self.bound_basis is None else self.bound_basis.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> CongruenceClaim:
        basis = data.get("bound_basis")
        return cls(
            source=source_from_json(data["source"]),
            modulus=int(data["modulus"]),
            m=int(data["m"]),
            t=int(data["t"]),
            n_max=int(data["n_max"]),
            bound_basis=None if basis is None else RSTuple.from_json(basis),
        )


@dataclass(frozen=True)
class CongruenceCertificate:
    claim: CongruenceClaim
    verified_through: int
    failures: tuple[tuple[int, int], ...]
    status: str  # "lemma-complete" or "empirical"
    pipeline_evidence: dict | None = None
    fingerprint: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_zero(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> tuple[int, int] | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            "schema": CERTIFICATE_SCHEMA,
            "claim": self.claim.to_json(),
            "verified_through": self.verified_through,
            "all_zero": self.all_zero,
            "failures": [list(f) for f in self.failures],
            "status": self.status,
            "pipeline_evidence": self.pipeline_evidence,
            "generator_fingerprint": self.fingerprint,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def certificate_from_json(data: dict | str) -> CongruenceCertificate:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("schema") != CERTIFICATE_SCHEMA:
        raise ValueError(f"unsupported certificate schema {data.get('schema')!r}")
    return CongruenceCertificate(
        claim=CongruenceClaim.from_json(data["claim"]),
        verified_through=int(data["verified_through"]),
        failures=tuple((int(n), int(res)) for n, res in data["failures"]),
        status=data["status"],
        pipeline_evidence=data["pipeline_evidence"],
        fingerprint=data["generator_fingerprint"],
        notes=tuple(data.get("notes", ())),
    )


def claim_fingerprint(claim: CongruenceClaim) -> str:
    blob = json.dumps(
        {"schema": CERTIFICATE_SCHEMA, "claim": claim.to_json()}, sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def _failures(coeffs, u, m, t, n_max) -> list[tuple[int, int]]:
    return [(n, coeffs[m * n + t] % u) for n in range(n_max + 1) if coeffs[m * n + t] % u]


def _pipeline_evidence(claim: CongruenceClaim, coeffs) -> tuple[dict, bool, list[str]]:
    """Run the Lemma ingredients; returns (evidence, lemma_ok, notes)."""
    tup = claim.bound_basis
    u, m = claim.modulus, claim.m
    notes = []
    orb = orbit(tup)
    v, floor_v = v_bound(tup)
    report = check_hypotheses(tup)

    # The finite check runs on the tuple's own eta quotient for every orbit member.
    order = m * floor_v + m - 1
    c_r = expand_mod(tup.r, order, u).coeffs
    orbit_checks = {}
    for t_prime in orb:
        orbit_checks[str(t_prime)] = [list(f) for f in _failures(c_r, u, m, t_prime, floor_v)]
    orbit_ok = all(not f for f in orbit_checks.values())

    # The claim's own series must agree with c_r mod u wherever it was checked.
    span = min(order, len(coeffs) - 1)
    mismatch = next((i for i in range(span + 1) if coeffs[i] != c_r[i]), None)
    if mismatch is not None:
        notes.append(f"claim series differs from the tuple's eta quotient mod {u} at index {mismatch}")

    evidence = {
        "tuple": tup.to_json(),
        "orbit": orb,
        "v": f"{v.numerator}/{v.denominator}",
        "floor_v": floor_v,
        "hypotheses": [
            {
                "delta": row.delta,
                "p_mr": f"{row.p_mr.numerator}/{row.p_mr.denominator}",
                "p_star": f"{row.p_star.numerator}/{row.p_star.denominator}",
                "sum": f"{row.total.numerator}/{row.total.denominator}",
                "ok": row.ok,
            }
            for row in report.rows
        ],
        "hypotheses_pass": report.passed,
        "orbit_failures": orbit_checks,
        "series_agreement_through": span if mismatch is None else mismatch - 1,
    }
    lemma_ok = report.passed and orbit_ok and mismatch is None and claim.t in orb
    if tup.asserted_delta_star:
        notes.append("admissibility of the tuple is asserted, not verified")
    return evidence, lemma_ok, notes


def verify_progression(claim: CongruenceClaim) -> CongruenceCertificate:
    coeffs = coefficients_mod(claim.source, claim.modulus, claim.max_index)
    failures = _failures(coeffs, claim.modulus, claim.m, claim.t, claim.n_max)
    evidence = None
    status = "empirical"
    notes: list[str] = []
    if claim.bound_basis is not None:
        evidence, lemma_ok, notes = _pipeline_evidence(claim, coeffs)
        if lemma_ok and not failures:
            status = "lemma-complete"
    return CongruenceCertificate(
        claim=claim,
        verified_through=claim.n_max,
        failures=tuple(failures),
        status=status,
        pipeline_evidence=evidence,
        fingerprint=claim_fingerprint(claim),
        notes=tuple(notes),
    )


# The mod-11 tuples; r' for t=161 is reused from t=62.
G211 = EtaQuotientSpec.from_mapping({1: 10, 2: -1, 11: -1, 22: 0})
R_PRIME = EtaQuotientSpec.from_mapping({1: 4, 2: 2, 3: 0, 6: 0, 11: 0, 22: 1, 33: 0, 66: 0})
THEOREM_TUPLES = {t: RSTuple(297, 22, 66, t, G211, R_PRIME) for t in (62, 161)}


def theorem_claims(n_max: int | None = None) -> list[CongruenceClaim]:
    """The two mod-11 claims for ``p_2(297 n + t)``, ``t`` in ``{62, 161}``.

    Default depth is ``max(floor(v), 200)``.
    """
    claims = []
    for t, tup in sorted(THEOREM_TUPLES.items()):
        depth = n_max if n_max is not None else max(v_bound(tup)[1], 200)
        claims.append(CongruenceClaim(PartitionFamily(2), 11, 297, t, depth, tup))
    return claims


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    checked_through: int
    first_mismatch: int | None = None
    detail: str = ""


def verify_chan_identity(n_max: int) -> IdentityReport:
    """Compare ``p_2(3n+2)`` with the coefficients of
    ``3 (q^3;q^3)^3 (q^6;q^6)^3 / ((q;q)^4 (q^2;q^2)^4)`` over the integers."""
    rhs = expand(EtaQuotientSpec.from_mapping({1: -4, 2: -4, 3: 3, 6: 3}), n_max).scale(3)
    p2 = partitions.pk_table(2, 3 * n_max + 2).values
    for n in range(n_max + 1):
        if rhs[n] != p2[3 * n + 2]:
            return IdentityReport(False, n_max, n, f"rhs={rhs[n]} p2={p2[3 * n + 2]}")
    return IdentityReport(True, n_max)


def verify_mod11_reduction(n_max: int, modulus: int = 11) -> IdentityReport:
    """Check ``p_2(n) = g(n) (mod modulus)`` where ``g`` expands
    ``(q;q)^10 / ((q^2;q^2) (q^11;q^11))``.

    ``p_2`` comes from the big-integer convolution table and ``g`` from the
    residue-ring expansion, so the two sides share no code path. The identity
    only holds for modulus 11; other moduli act as negative controls.
    """
    p2 = reduce(partitions.pk_table(2, n_max, "convolution").values, modulus).coeffs
    g = expand_mod(G211, n_max, modulus).coeffs
    for n in range(n_max + 1):
        if p2[n] != g[n]:
            return IdentityReport(False, n_max, n, f"p2={p2[n]} g={g[n]} mod {modulus}")
    return IdentityReport(True, n_max)


def scan(source: SeriesSource, u: int, m: int, n_max: int) -> list[int]:
    """Residues ``t`` with ``c(m n + t) = 0 (mod u)`` for every ``n <= n_max``.

    Purely empirical: survivors carry no proof status.
    """
    if u < 2 or m < 1 or n_max < 0:
        raise ValueError("scan needs u >= 2, m >= 1, n_max >= 0")
    coeffs = coefficients_mod(source, u, m * (n_max + 1) - 1)
    return [t for t in range(m) if all(coeffs[m * n + t] == 0 for n in range(n_max + 1))]
