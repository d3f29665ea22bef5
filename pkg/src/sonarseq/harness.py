"""Comparison harness: run every construction over a parameter sweep.

For each prime p <= p_max and prime power q <= q_max, build all applicable
sequences with canonical parameter choices (smallest primitive elements,
smallest irreducible modulus, (a,b,c) = (1,0,0), s = 0), verify each one,
and tabulate (construction, params, m, n, density).  A config mapping can
override any element choice per construction.  Rows failing verification
or the dimension contract abort the run; they indicate bugs, not data.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .classic import golomb, quadratic, shift, welch_exp, welch_exp_short, welch_log
from .fold import SonarSeq, sonar_from_bose, sonar_from_ruzsa_mod_p, sonar_from_ruzsa_mod_p_minus_1
from .numth import prime_powers_upto, primes_upto
from .verify import check_modular

log = logging.getLogger(__name__)

CSV_HEADER = "construction,params,m,n,density,verified"

# construction -> (m, n) as functions of the swept parameter
DIMENSIONS: dict[str, Callable[[int], tuple[int, int]]] = {
    "quadratic": lambda p: (p, p + 1),
    "shift": lambda q: (q - 1, q),
    "welch-exp": lambda p: (p, p),
    "welch-exp-short": lambda p: (p, p - 1),
    "welch-log": lambda p: (p - 1, p - 1),
    "golomb": lambda q: (q - 1, q - 2),
    "bose-fold": lambda q: (q - 1, q),
    "ruzsa-fold-mod-p": lambda p: (p - 1, p - 1),
    "ruzsa-fold-mod-p-1": lambda p: (p, p - 1),
}


@dataclass(frozen=True)
class ComparisonRow:
    construction: str
    params: dict[str, Any]
    m: int
    n: int
    density: Fraction
    verified: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "construction": self.construction,
            "params": dict(self.params),
            "m": self.m,
            "n": self.n,
            "density": {"num": self.density.numerator, "den": self.density.denominator},
            "verified": self.verified,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "ComparisonRow":
        density = data["density"]
        return cls(
            construction=data["construction"],
            params=dict(data["params"]),
            m=int(data["m"]),
            n=int(data["n"]),
            density=Fraction(density["num"], density["den"]),
            verified=bool(data["verified"]),
        )


def _per_value(config: dict[str, Any], construction: str, key: str, value: int) -> Optional[int]:
    """Config override for one element choice, keyed by the swept value.

    A scalar entry applies at every p or q; a {str(value): choice} table
    applies selectively.  Missing entries mean the canonical default.
    """
    table = config.get(construction, {}).get(key)
    if table is None:
        return None
    if isinstance(table, dict):
        got = table.get(str(value))
        return None if got is None else int(got)
    return int(table)


def _per_value_or(config: dict[str, Any], construction: str, key: str, value: int, default: int) -> int:
    got = _per_value(config, construction, key, value)
    return default if got is None else got


def _row(construction: str, params: dict[str, Any], seq: SonarSeq, swept: int) -> ComparisonRow:
    m_want, n_want = DIMENSIONS[construction](swept)
    if (seq.m, seq.n) != (m_want, n_want):
        raise AssertionError(
            f"{construction} dimension contract broken: got {seq.m}x{seq.n}, want {m_want}x{n_want}"
        )
    report = check_modular(seq)
    if not report.ok:
        raise AssertionError(f"{construction} {params} failed verification: {report}")
    return ComparisonRow(
        construction=construction,
        params=params,
        m=seq.m,
        n=seq.n,
        density=Fraction(seq.n, seq.m),
        verified=True,
    )


def run_comparison(
    p_max: int, q_max: int, config: Optional[dict[str, Any]] = None
) -> list[ComparisonRow]:
    """All constructions for primes p <= p_max and prime powers q <= q_max.

    Inapplicable parameters (quadratic and the Ruzsa folds at p = 2, golomb
    at q = 2) are skipped with a logged diagnostic.  Output is sorted by
    (construction, m, n) and deterministic for fixed bounds and config.
    """
    if p_max < 3 or q_max < 3:
        raise ValueError(f"bounds must be >= 3, got p_max={p_max}, q_max={q_max}")
    cfg = config or {}
    rows: list[ComparisonRow] = []

    for p in primes_upto(p_max):
        welch_s = _per_value_or(cfg, "welch-exp", "s", p, 0)
        if p == 2:
            log.info("quadratic skipped for p=2: requires an odd prime")
            log.info("ruzsa folds skipped for p=2: require an odd prime")
        else:
            quad_args = {
                k: _per_value_or(cfg, "quadratic", k, p, d) for k, d in (("a", 1), ("b", 0), ("c", 0))
            }
            seq = quadratic(p, **quad_args)
            rows.append(_row("quadratic", {"p": p, **quad_args}, seq, p))
            theta = _per_value(cfg, "ruzsa", "theta", p)
            seq = sonar_from_ruzsa_mod_p(p, theta)
            rows.append(_row("ruzsa-fold-mod-p", {"p": p, "theta": seq.provenance["theta"]}, seq, p))
            seq = sonar_from_ruzsa_mod_p_minus_1(p, theta)
            rows.append(_row("ruzsa-fold-mod-p-1", {"p": p, "theta": seq.provenance["theta"]}, seq, p))
        alpha = _per_value(cfg, "welch-exp", "alpha", p)
        seq = welch_exp(p, alpha, welch_s)
        rows.append(_row("welch-exp", {"p": p, "alpha": seq.provenance["alpha"], "s": welch_s}, seq, p))
        alpha = _per_value(cfg, "welch-exp-short", "alpha", p)
        seq = welch_exp_short(p, alpha)
        rows.append(_row("welch-exp-short", {"p": p, "alpha": seq.provenance["alpha"]}, seq, p))
        alpha = _per_value(cfg, "welch-log", "alpha", p)
        seq = welch_log(p, alpha)
        rows.append(_row("welch-log", {"p": p, "alpha": seq.provenance["alpha"]}, seq, p))

    for q in prime_powers_upto(q_max):
        seq = shift(q, _per_value(cfg, "shift", "alpha", q), _per_value(cfg, "shift", "beta", q))
        rows.append(
            _row(
                "shift",
                {"q": q, "alpha": seq.provenance["alpha"], "beta": seq.provenance["beta"]},
                seq,
                q,
            )
        )
        if q == 2:
            log.info("golomb skipped for q=2: requires q > 2")
        else:
            seq = golomb(q, _per_value(cfg, "golomb", "alpha", q), _per_value(cfg, "golomb", "beta", q))
            rows.append(
                _row(
                    "golomb",
                    {"q": q, "alpha": seq.provenance["alpha"], "beta": seq.provenance["beta"]},
                    seq,
                    q,
                )
            )
        seq = sonar_from_bose(q, _per_value(cfg, "bose", "theta", q), _per_value(cfg, "bose", "alpha", q))
        rows.append(
            _row(
                "bose-fold",
                {"q": q, "theta": seq.provenance["theta"], "alpha": seq.provenance["alpha"]},
                seq,
                q,
            )
        )

    rows.sort(key=lambda r: (r.construction, r.m, r.n, sorted(r.params.items())))
    return rows


def _params_str(params: dict[str, Any]) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def rows_to_csv(rows: list[ComparisonRow]) -> str:
    """CSV with the params field quoted, e.g. bose-fold,"q=9;theta=6;alpha=6",8,9,9/8,true."""
    lines = [CSV_HEADER]
    for r in rows:
        params = _params_str(r.params).replace('"', '""')
        verified = "true" if r.verified else "false"
        lines.append(f'{r.construction},"{params}",{r.m},{r.n},{r.density},{verified}')
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[ComparisonRow]) -> str:
    return json.dumps([r.to_json() for r in rows], indent=2) + "\n"


def export_rows(rows: list[ComparisonRow], format: str, path: str) -> None:
    if format == "csv":
        text = rows_to_csv(rows)
    elif format == "json":
        text = rows_to_json(rows)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as e:
        raise OSError(f"cannot write comparison table to {path}: {e}") from e


def load_rows(path: str) -> list[ComparisonRow]:
    """Read back a JSON export."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise OSError(f"cannot read comparison table from {path}: {e}") from e
    return [ComparisonRow.from_json(item) for item in data]
