"""Distinct-differences verification for sonar sequences.

A sequence f(1..n) has the plain distinct-differences property when, for
every shift h in [1, n-1], the n-h differences f(i+h) - f(i) are pairwise
distinct as integers; the modular variant asks for distinctness mod m.
Both checks walk the difference triangle row by row and report the first
violation as a witness (h, i, j), lexicographically least.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence, Union

from .errors import EmptySequence
from .fold import SonarSeq

SeqLike = Union[SonarSeq, Sequence[int], Iterable[int]]


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a distinct-differences check.

    witness is (h, i, j) with 1 <= h <= n-1 and 1 <= i < j <= n-h such
    that f(i+h) - f(i) equals f(j+h) - f(j) (mod m in modular mode);
    present iff ok is False.
    """

    ok: bool
    witness: Optional[tuple[int, int, int]] = None
    mode: str = "modular"
    m: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DifferenceTriangle:
    """Rows of shifted differences: row h holds the n-h values f(i+h) - f(i)."""

    rows: tuple[tuple[int, ...], ...]
    mode: str = "plain"
    m: Optional[int] = None

    def row(self, h: int) -> tuple[int, ...]:
        if not 1 <= h <= len(self.rows):
            raise IndexError(f"shift h must be in [1, {len(self.rows)}], got {h}")
        return self.rows[h - 1]

    def __len__(self) -> int:
        return len(self.rows)


def _as_values(seq: SeqLike) -> tuple[int, ...]:
    if isinstance(seq, SonarSeq):
        values = seq.values
    else:
        values = tuple(int(v) for v in seq)
    if not values:
        raise EmptySequence("sequence must have length >= 1")
    return values


def difference_triangle(seq: SeqLike, m: Optional[int] = None) -> DifferenceTriangle:
    """All difference rows of seq; reduced mod m when a modulus applies.

    m defaults to seq.m for a modular SonarSeq; raw sequences give signed
    integer rows unless m is passed.
    """
    if m is None and isinstance(seq, SonarSeq) and seq.modular:
        m = seq.m
    values = _as_values(seq)
    n = len(values)
    rows = []
    for h in range(1, n):
        row = tuple(values[i + h] - values[i] for i in range(n - h))
        if m is not None:
            row = tuple(d % m for d in row)
        rows.append(row)
    mode = "plain" if m is None else "modular"
    return DifferenceTriangle(rows=tuple(rows), mode=mode, m=m)


def _first_witness(rows: tuple[tuple[int, ...], ...]) -> Optional[tuple[int, int, int]]:
    # smallest h with a duplicate row, then lexicographically least (i, j)
    for h, row in enumerate(rows, start=1):
        if len(set(row)) == len(row):
            continue
        for i in range(len(row)):
            for j in range(i + 1, len(row)):
                if row[i] == row[j]:
                    return (h, i + 1, j + 1)
        raise AssertionError("duplicate row without a duplicate pair")
    return None


def check_plain(seq: SeqLike) -> VerifyReport:
    """Distinct differences over the integers, ignoring any modulus on seq."""
    tri = difference_triangle(_as_values(seq))
    witness = _first_witness(tri.rows)
    return VerifyReport(ok=witness is None, witness=witness, mode="plain", m=None)


def check_modular(seq: SeqLike, m: Optional[int] = None) -> VerifyReport:
    """Distinct differences mod m.

    m defaults to seq.m for a modular SonarSeq and must be given otherwise.
    """
    if m is None:
        if isinstance(seq, SonarSeq) and seq.modular:
            m = seq.m
        else:
            raise ValueError("m is required unless seq is a modular SonarSeq")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    tri = difference_triangle(seq, m)
    witness = _first_witness(tri.rows)
    return VerifyReport(ok=witness is None, witness=witness, mode="modular", m=m)


def report_as_dict(report: VerifyReport) -> dict[str, Any]:
    data: dict[str, Any] = {"ok": report.ok, "witness": None, "mode": report.mode}
    if report.m is not None:
        data["m"] = report.m
    if report.witness is not None:
        h, i, j = report.witness
        data["witness"] = {"h": h, "i": i, "j": j}
    return data
