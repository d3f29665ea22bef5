"""Command line interface.

Subcommands: construct (any sequence construction by name), sidon (Bose or
Ruzsa set), fold (fold a Sidon set JSON), verify (check a sequence JSON),
search (maximal length search), compare (construction comparison table).
All structured output is JSON on stdout except compare, which defaults to
CSV; diagnostics go to stderr.
"""

import json
import logging
import sys
from typing import Any, Optional

import click

from . import classic, fold, harness, search, sidon, verify
from .errors import SonarseqError

CONSTRUCTIONS = (
    "quadratic",
    "shift",
    "welch-exp",
    "welch-exp-short",
    "welch-log",
    "golomb",
    "bose-fold",
    "ruzsa-fold-mod-p",
    "ruzsa-fold-mod-p-1",
)


def _echo_json(data: dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2))


def _read_json(path: Optional[str]) -> dict[str, Any]:
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _require(value: Optional[int], option: str, name: str) -> int:
    if value is None:
        raise click.UsageError(f"{name} requires {option}")
    return value


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Show skipped-row diagnostics and debug info.")
def main(verbose: bool) -> None:
    """Sidon sets, sonar sequences, and their verification."""
    # rebind the handler to the current stderr on every invocation so that
    # repeated in-process runs (tests, embedding) do not log into a stale stream
    logger = logging.getLogger("sonarseq")
    logger.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.INFO if verbose else logging.WARNING)
    logger.propagate = False


@main.command()
@click.argument("name", type=click.Choice(CONSTRUCTIONS))
@click.option("--p", type=int, help="Prime parameter.")
@click.option("--q", type=int, help="Prime power parameter.")
@click.option("--a", type=int, default=1, show_default=True, help="Quadratic coefficient a.")
@click.option("--b", type=int, default=0, show_default=True, help="Quadratic coefficient b.")
@click.option("--c", type=int, default=0, show_default=True, help="Quadratic coefficient c.")
@click.option("--s", type=int, default=0, show_default=True, help="Welch exponent shift.")
@click.option("--theta", type=int, help="Primitive element (integer encoding).")
@click.option("--alpha", type=int, help="Field element (integer encoding).")
@click.option("--beta", type=int, help="Field element (integer encoding).")
def construct(
    name: str,
    p: Optional[int],
    q: Optional[int],
    a: int,
    b: int,
    c: int,
    s: int,
    theta: Optional[int],
    alpha: Optional[int],
    beta: Optional[int],
) -> None:
    """Build the named sequence construction and print its JSON."""
    try:
        if name == "quadratic":
            seq = classic.quadratic(_require(p, "--p", name), a, b, c)
        elif name == "shift":
            seq = classic.shift(_require(q, "--q", name), alpha, beta)
        elif name == "welch-exp":
            seq = classic.welch_exp(_require(p, "--p", name), alpha, s)
        elif name == "welch-exp-short":
            seq = classic.welch_exp_short(_require(p, "--p", name), alpha)
        elif name == "welch-log":
            seq = classic.welch_log(_require(p, "--p", name), alpha)
        elif name == "golomb":
            seq = classic.golomb(_require(q, "--q", name), alpha, beta)
        elif name == "bose-fold":
            seq = fold.sonar_from_bose(_require(q, "--q", name), theta, alpha)
        elif name == "ruzsa-fold-mod-p":
            seq = fold.sonar_from_ruzsa_mod_p(_require(p, "--p", name), theta)
        else:
            seq = fold.sonar_from_ruzsa_mod_p_minus_1(_require(p, "--p", name), theta)
    except SonarseqError as e:
        raise click.ClickException(str(e)) from e
    _echo_json(seq.to_json())


@main.command("sidon")
@click.argument("name", type=click.Choice(["bose", "ruzsa"]))
@click.option("--p", type=int, help="Prime parameter (ruzsa).")
@click.option("--q", type=int, help="Prime power parameter (bose).")
@click.option("--theta", type=int, help="Primitive element (integer encoding).")
@click.option("--alpha", type=int, help="Field element outside the base field (bose).")
def sidon_cmd(
    name: str, p: Optional[int], q: Optional[int], theta: Optional[int], alpha: Optional[int]
) -> None:
    """Build a Bose or Ruzsa Sidon set and print its JSON."""
    try:
        if name == "bose":
            s = sidon.bose(_require(q, "--q", name), theta, alpha)
        else:
            s = sidon.ruzsa(_require(p, "--p", name), theta)
    except SonarseqError as e:
        raise click.ClickException(str(e)) from e
    _echo_json(s.to_json())


@main.command("fold")
@click.option("--m", type=int, required=True, help="Target modulus.")
@click.option("--b", type=int, required=True, help="Folding divisor.")
@click.option(
    "--in", "path", type=str, default="-", show_default=True, help="Sidon set JSON file, - for stdin."
)
def fold_cmd(m: int, b: int, path: str) -> None:
    """Fold a Sidon set (re-verified first) into a modular sonar sequence."""
    try:
        s = sidon.SidonSet.from_json(_read_json(path))
        seq = fold.fold_sidon(s, m, b)
    except (SonarseqError, ValueError, KeyError) as e:
        raise click.ClickException(str(e)) from e
    _echo_json(seq.to_json())


@main.command("verify")
@click.option(
    "--in", "path", type=str, default="-", show_default=True, help="Sequence JSON file, - for stdin."
)
@click.option("--m", type=int, help="Override modulus for the modular check.")
@click.option("--plain", is_flag=True, help="Check plain distinct differences over the integers.")
def verify_cmd(path: str, m: Optional[int], plain: bool) -> None:
    """Check the distinct-differences property; exit 0 on pass, 1 on fail."""
    try:
        seq = fold.SonarSeq.from_json(_read_json(path))
        report = verify.check_plain(seq) if plain else verify.check_modular(seq, m)
    except (SonarseqError, ValueError, KeyError) as e:
        raise click.ClickException(str(e)) from e
    _echo_json(verify.report_as_dict(report))
    if not report.ok:
        h, i, j = report.witness
        click.echo(f"violation at shift h={h}: positions i={i}, j={j}", err=True)
        sys.exit(1)


@main.command("search")
@click.option("--m", type=int, required=True, help="Modulus / symbol count.")
@click.option(
    "--mode",
    type=click.Choice(["modular", "plain"]),
    default="modular",
    show_default=True,
)
@click.option("--max-nodes", type=int, help="Node budget (default unbounded).")
@click.option("--max-seconds", type=float, help="Time budget in seconds (default unbounded).")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@click.option(
    "--prune/--no-prune",
    "prune_symmetry",
    default=True,
    show_default=True,
    help="Fix f(1)=0 in modular mode (translation symmetry).",
)
def search_cmd(
    m: int,
    mode: str,
    max_nodes: Optional[int],
    max_seconds: Optional[float],
    jobs: int,
    prune_symmetry: bool,
) -> None:
    """Search the longest m x n (modular) sonar sequence; print the result JSON."""
    try:
        result = search.search_max(
            m,
            mode,
            max_nodes=max_nodes,
            max_seconds=max_seconds,
            prune_symmetry=prune_symmetry,
            jobs=jobs,
        )
    except (SonarseqError, ValueError) as e:
        raise click.ClickException(str(e)) from e
    _echo_json(result.to_json())


def _load_config(path: str) -> dict[str, Any]:
    if path.endswith(".json"):
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        return tomllib.load(fh)


@main.command("compare")
@click.option("--p-max", type=int, required=True, help="Largest prime to sweep.")
@click.option("--q-max", type=int, required=True, help="Largest prime power to sweep.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@click.option("--out", type=str, help="Output path (default stdout).")
@click.option("--config", "config_path", type=str, help="TOML or JSON element-choice overrides.")
def compare_cmd(
    p_max: int, q_max: int, fmt: str, out: Optional[str], config_path: Optional[str]
) -> None:
    """Tabulate every construction over a parameter sweep."""
    try:
        config = _load_config(config_path) if config_path else None
        rows = harness.run_comparison(p_max, q_max, config)
        if out:
            harness.export_rows(rows, fmt, out)
        else:
            text = harness.rows_to_csv(rows) if fmt == "csv" else harness.rows_to_json(rows)
            click.echo(text, nl=False)
    except (SonarseqError, ValueError, OSError) as e:
        raise click.ClickException(str(e)) from e


if __name__ == "__main__":
    main()
