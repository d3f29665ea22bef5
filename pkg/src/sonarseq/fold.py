"""Fold Sidon sets into modular sonar sequences.

A Sidon set A in Z_{mb} whose residues mod b form a run of n consecutive
values r0, r0+1, ..., r0+n-1 (r0 = 1, or r0 = 0 when a multiple of b is
present) folds to the length-n sequence f(i) = floor(a_i / b), where a_i
is the unique element congruent to r0+i-1 mod b.  The run must not wrap
past b-1: a wrapped index pair would shift one difference by b and break
the distinct-differences argument.  Specializations: the Bose set in
Z_{q^2-1} with b = q+1 gives a (q-1) x q sequence; the Ruzsa set in
Z_{p^2-p} gives (p-1) x (p-1) with b = p and p x (p-1) with b = p-1.
"""

from dataclasses import dataclass, field
from typing import Any

from . import ff
from .errors import CoverageFailure, EmptySequence, ModulusMismatch, NotSidon
from .sidon import SidonSet, bose, ruzsa, verify_sidon


@dataclass(frozen=True)
class SonarSeq:
    """A sequence f(1..n), modular over Z_m or plain with values in [1, m].

    The serialized form is 1-based: values[0] is f(1).
    """

    values: tuple[int, ...]
    m: int
    modular: bool = True
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise EmptySequence("sequence must have length >= 1")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.modular:
            if any(not 0 <= v < self.m for v in values):
                raise ValueError(f"modular values must lie in [0, {self.m - 1}]")
        elif any(not 1 <= v <= self.m for v in values):
            raise ValueError(f"plain values must lie in [1, {self.m}]")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "modular": self.modular,
            "values": list(self.values),
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "SonarSeq":
        values = tuple(data["values"])
        if "n" in data and int(data["n"]) != len(values):
            raise ValueError(f"n={data['n']} does not match {len(values)} values")
        return cls(
            values=values,
            m=int(data["m"]),
            modular=bool(data.get("modular", True)),
            provenance=dict(data.get("provenance") or {}),
        )


def fold_sidon(s: SidonSet, m: int, b: int) -> SonarSeq:
    """Fold a Sidon set in Z_{mb} into an m x n modular sonar sequence, n = |s|.

    Requires s.modulus == m*b, the Sidon property (always re-checked), and
    residues mod b forming the run [1, n], or [0, n-1] when an element is
    divisible by b.  The sequence lists floor(a/b) by ascending residue.
    Never truncates: any violation raises instead of producing a sequence.
    """
    if m < 1 or b < 1 or s.modulus != m * b:
        raise ModulusMismatch(f"set modulus {s.modulus} != m*b = {m}*{b}")
    report = verify_sidon(s)
    if not report.ok:
        raise NotSidon(f"not a Sidon set: witness {report.witness}")
    n = len(s)
    by_residue: dict[int, int] = {}
    for a in s.elements:
        r = a % b
        if r in by_residue:
            raise CoverageFailure(f"residue class {r} mod {b} hit twice")
        by_residue[r] = a
    first = 0 if 0 in by_residue else 1
    missing = [r for r in range(first, first + n) if r not in by_residue]
    if missing:
        raise CoverageFailure(
            f"residues mod {b} do not form the run [{first}, {first + n - 1}]: missing {missing}"
        )
    values = tuple(by_residue[r] // b for r in range(first, first + n))
    return SonarSeq(
        values=values,
        m=m,
        modular=True,
        provenance={
            "construction": "sidon-fold",
            "m": m,
            "b": b,
            "first_residue": first,
            "source": dict(s.provenance),
        },
    )


def sonar_from_bose(
    q: int,
    theta: ff.FieldElem | None = None,
    alpha: ff.FieldElem | None = None,
    ctx: ff.FieldCtx | None = None,
) -> SonarSeq:
    """(q-1) x q modular sonar sequence from the Bose set, folded with b = q+1."""
    s = bose(q, theta=theta, alpha=alpha, ctx=ctx)
    seq = fold_sidon(s, m=q - 1, b=q + 1)
    prov = {
        "construction": "bose-fold",
        "first_residue": seq.provenance["first_residue"],
        **{k: v for k, v in s.provenance.items() if k != "construction"},
    }
    return SonarSeq(values=seq.values, m=seq.m, modular=True, provenance=prov)


def sonar_from_ruzsa_mod_p(p: int, theta: int | None = None) -> SonarSeq:
    """(p-1) x (p-1) modular sonar sequence from the Ruzsa set, folded with b = p."""
    s = ruzsa(p, theta=theta)
    seq = fold_sidon(s, m=p - 1, b=p)
    prov = {
        "construction": "ruzsa-fold-mod-p",
        "first_residue": seq.provenance["first_residue"],
        **{k: v for k, v in s.provenance.items() if k != "construction"},
    }
    return SonarSeq(values=seq.values, m=seq.m, modular=True, provenance=prov)


def sonar_from_ruzsa_mod_p_minus_1(p: int, theta: int | None = None) -> SonarSeq:
    """p x (p-1) modular sonar sequence from the Ruzsa set, folded with b = p-1.

    One element is divisible by p-1, so the residues form [0, p-2] and the
    sequence starts with that element's quotient.
    """
    s = ruzsa(p, theta=theta)
    seq = fold_sidon(s, m=p, b=p - 1)
    prov = {
        "construction": "ruzsa-fold-mod-p-1",
        "first_residue": seq.provenance["first_residue"],
        **{k: v for k, v in s.provenance.items() if k != "construction"},
    }
    return SonarSeq(values=seq.values, m=seq.m, modular=True, provenance=prov)


def unfold(seq: SonarSeq, b: int, first_residue: int | None = None) -> SidonSet:
    """Reconstruct the folded set: a_i = f(i)*b + (first_residue + i - 1)."""
    if first_residue is None:
        first_residue = int(seq.provenance.get("first_residue", 1))
    elems = tuple(v * b + first_residue + i for i, v in enumerate(seq.values))
    return SidonSet(elements=elems, modulus=seq.m * b, provenance={"construction": "unfold"})
