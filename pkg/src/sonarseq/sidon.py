"""Sidon sets in Z_N: Bose and Ruzsa constructions, brute-force verification.

A Sidon set has all pairwise sums a_i + a_j (i <= j) distinct mod N, or
equivalently all nonzero differences distinct.  The Bose construction takes
discrete logs of a coset alpha + F_q inside GF(q^2)* and lands in Z_{q^2-1};
the Ruzsa construction maps {(i, theta^i)} through the CRT isomorphism
Z_{p-1} x Z_p -> Z_{p^2-p}.
"""

from dataclasses import dataclass, field
from math import isqrt
from typing import Any

from . import ff
from .errors import AlphaInBaseField, NotOddPrime, NotPrime, NotPrimitive
from .numth import is_prime, prime_power_decompose


@dataclass(frozen=True)
class SidonSet:
    """A set of residues in Z_N with construction provenance.

    Elements are normalized to a strictly sorted tuple.  Construction here
    does not verify the Sidon property; run verify_sidon() for that.
    """

    elements: tuple[int, ...]
    modulus: int
    provenance: dict[str, Any] = field(default_factory=lambda: {"construction": "external"})

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        elems = tuple(sorted(int(a) for a in self.elements))
        if any(not 0 <= a < self.modulus for a in elems):
            raise ValueError("elements must lie in [0, modulus)")
        if any(a == b for a, b in zip(elems, elems[1:])):
            raise ValueError("elements must be distinct")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus,
            "elements": list(self.elements),
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "SidonSet":
        return cls(
            elements=tuple(data["elements"]),
            modulus=int(data["modulus"]),
            provenance=dict(data.get("provenance") or {"construction": "external"}),
        )


@dataclass(frozen=True)
class SidonReport:
    """Outcome of a Sidon check; witness is (a, b, c, d) with a+b = c+d, {a,b} != {c,d}."""

    ok: bool
    witness: tuple[int, int, int, int] | None = None


def verify_sidon(s: SidonSet) -> SidonReport:
    """Check all pairwise sums a_i + a_j (i <= j) mod N for collisions.

    Hash-set over sums: O(k^2) time and space.  The first collision in
    lexicographic pair order is reported.
    """
    seen: dict[int, tuple[int, int]] = {}
    elems = s.elements
    n = s.modulus
    for i, a in enumerate(elems):
        for b in elems[i:]:
            total = (a + b) % n
            if total in seen:
                c, d = seen[total]
                return SidonReport(ok=False, witness=(c, d, a, b))
            seen[total] = (a, b)
    return SidonReport(ok=True)


def residues(s: SidonSet, b: int) -> list[int]:
    """Multiset {a mod b : a in s}, as a sorted list with multiplicity."""
    if b < 1:
        raise ValueError(f"modulus must be >= 1, got {b}")
    return sorted(a % b for a in s.elements)


def coverage_check(s: SidonSet, b: int, n: int) -> bool:
    """True iff residues of s mod b hit each class labelled 1..n exactly once.

    Residue class 0 is labelled n, so coverage holds exactly when the
    residues form the consecutive run [1, n] or [0, n-1] within [0, b-1];
    those are the index windows a fold can use without wrapping mod b.
    """
    if len(s.elements) != n or n > b:
        return False
    labels = sorted(n if r == 0 else r for r in residues(s, b))
    return labels == list(range(1, n + 1))


def max_sidon_bound(n: int) -> int:
    """Upper bound floor((1 + sqrt(4N-3))/2) on Sidon set size in a group of order N.

    Exact integer arithmetic; isqrt truncation does not change the floor.
    """
    if n < 1:
        raise ValueError(f"group order must be >= 1, got {n}")
    return (1 + isqrt(4 * n - 3)) // 2


def bose(
    q: int,
    theta: ff.FieldElem | None = None,
    alpha: ff.FieldElem | None = None,
    ctx: ff.FieldCtx | None = None,
) -> SidonSet:
    """Bose Sidon set: {log_theta(alpha + a) : a in F_q} inside Z_{q^2-1}.

    Works in GF(q^2); alpha must lie outside the order-q subfield (degree 2
    over F_q) and theta must generate GF(q^2)*.  Defaults: canonical field
    context, theta = smallest generator, alpha = smallest element outside
    the subfield.  Yields exactly q elements.
    """
    p, s = prime_power_decompose(q)
    if ctx is None:
        ctx = ff.field_new(p, 2 * s)
    elif ctx.p != p or ctx.r != 2 * s:
        raise ValueError(f"context {ctx!r} is not GF({q}^2)")
    if theta is None:
        theta = ctx.primitive
    elif not ctx.is_primitive(theta):
        raise NotPrimitive(f"{theta} does not generate GF({q**2})*")
    base_field = ff.subfield_image(ctx, q)
    if alpha is None:
        alpha = next(x for x in ctx.elements() if x not in set(base_field))
    elif alpha == 0 or ctx.pow(alpha, q - 1) == 1:
        raise AlphaInBaseField(f"alpha={alpha} lies in the subfield of order {q}")
    elems = sorted(ctx.discrete_log(ctx.add(alpha, a), base=theta) for a in base_field)
    assert len(elems) == q
    assert len(elems) <= max_sidon_bound(q * q - 1)
    return SidonSet(
        elements=tuple(elems),
        modulus=q * q - 1,
        provenance={
            "construction": "bose",
            "q": q,
            "theta": theta,
            "alpha": alpha,
            "modulus_poly": list(ctx.modulus_poly),
        },
    )


def ruzsa(p: int, theta: int | None = None) -> SidonSet:
    """Ruzsa Sidon set: {i*p - theta^i*(p-1) mod (p^2-p) : 1 <= i <= p-1}.

    Requires an odd prime p and a primitive root theta mod p (default:
    smallest).  Yields p-1 elements of Z_{p^2-p}.
    """
    if not is_prime(p):
        raise NotPrime(f"p must be prime, got {p}")
    if p == 2:
        raise NotOddPrime("p must be an odd prime")
    fp = ff.field_new(p, 1)
    if theta is None:
        theta = fp.primitive
    elif not fp.is_primitive(theta % p):
        raise NotPrimitive(f"{theta} is not a primitive root mod {p}")
    n = p * p - p
    elems = sorted((i * p - pow(theta, i, p) * (p - 1)) % n for i in range(1, p))
    assert len(elems) == p - 1
    assert len(elems) <= max_sidon_bound(n)
    return SidonSet(
        elements=tuple(elems),
        modulus=n,
        provenance={"construction": "ruzsa", "p": p, "theta": theta},
    )
