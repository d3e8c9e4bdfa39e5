"""Command-line front end.

Exit codes: 0 when every claim reaches its expected verdict class
(VERIFIED, or REFUTED-realization for the odd quaternion cases), 1 when
a claim is refuted or not applicable, 3 when a budget ran out
(INCONCLUSIVE), 2 on usage or internal errors.  Reports go to stdout,
diagnostics to stderr; nothing is written to disk unless --out is given.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import click

from . import __version__, garside, sphere, theorems
from .certificates import Verdict, to_json
from .freegroup import BudgetExceededError, artin_disk_endo
from .selftest import run_cross_oracle
from .words import BraidWord, WordSyntaxError

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INTERNAL = 2
EXIT_INCONCLUSIVE = 3

CLAIMS = ("q8", "dicyclic", "odd-obstruction", "torsion", "background")

_EXPECTED = {Verdict.VERIFIED, Verdict.REFUTED_REALIZATION}


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings of one verify run."""

    command: str
    claim: str
    n_values: tuple[int, ...]
    output_format: str
    max_cosets: int
    max_endo_letters: int

    def __post_init__(self):
        if not self.n_values:
            raise click.UsageError("the n-range is empty")
        if self.max_cosets < 1 or self.max_endo_letters < 1:
            raise click.UsageError("budgets must be positive")

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "claim": self.claim,
            "n_values": list(self.n_values),
            "format": self.output_format,
            "max_cosets": self.max_cosets,
            "max_endo_letters": self.max_endo_letters,
        }


def parse_word(text: str, n: int) -> BraidWord:
    """Parse the signed-integer word syntax, mapping errors to usage errors."""
    try:
        return BraidWord.from_text(text, n)
    except WordSyntaxError as exc:
        raise click.BadParameter(str(exc), param_hint="--word") from None


def _n_range(n, n_from, n_to, minimum):
    if n is not None:
        if n_from is not None or n_to is not None:
            raise click.UsageError("give either --n or --from/--to, not both")
        values = [n]
    else:
        if n_from is None or n_to is None:
            raise click.UsageError("give --n, or both --from and --to")
        if n_to < n_from:
            raise click.UsageError("--to must be >= --from")
        values = list(range(n_from, n_to + 1))
    for value in values:
        if value < minimum:
            raise click.UsageError(f"n = {value} is below the minimum {minimum} for this claim")
    return values


def _emit(doc_text: str, out):
    if out is not None:
        out.write(doc_text)
        out.flush()
    else:
        click.echo(doc_text, nl=False)


def _certificate_text(cert) -> str:
    lines = [f"claim={cert.claim} n={cert.n} verdict={cert.verdict.value}"]
    for key in sorted(cert.flags):
        lines.append(f"  flag {key} = {cert.flags[key]}")
    for step in cert.steps:
        ax = ",".join(step.axioms) if step.axioms else "-"
        mark = "ok " if step.ok else "FAIL"
        lines.append(f"  [{step.id}] {mark} {step.method} (axioms: {ax})")
        lines.append(f"      {step.statement}")
    cited = ", ".join(cert.cited_axiom_ids()) or "none"
    lines.append(f"  axioms cited: {cited}")
    return "\n".join(lines) + "\n"


@click.group()
@click.version_option(__version__)
def main():
    """Certified computations in sphere braid groups."""


@main.command()
@click.option("--claim", type=click.Choice(CLAIMS), required=True)
@click.option("--n", type=int, default=None)
@click.option("--from", "n_from", type=int, default=None)
@click.option("--to", "n_to", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(("text", "machine")), default="text")
@click.option("--max-cosets", type=int, default=theorems.DEFAULT_MAX_COSETS, show_default=True)
@click.option(
    "--max-endo-letters", type=int, default=theorems.DEFAULT_MAX_IMAGE_LETTERS, show_default=True
)
@click.option("--out", type=click.File("w"), default=None)
@click.pass_context
def verify(ctx, claim, n, n_from, n_to, fmt, max_cosets, max_endo_letters, out):
    """Run a verification plan over one n or a range, emitting certificates."""
    minimum = 2 if claim == "background" else 3
    values = _n_range(n, n_from, n_to, minimum)
    if claim == "odd-obstruction":
        values = [v for v in values if v % 2 == 1]
        if not values:
            raise click.UsageError("odd-obstruction needs at least one odd n in the range")
    config = RunConfig("verify", claim, tuple(values), fmt, max_cosets, max_endo_letters)
    runners = {
        "q8": lambda m: theorems.verify_q8(m, max_cosets, max_endo_letters),
        "dicyclic": lambda m: theorems.verify_dicyclic(m, max_cosets, max_endo_letters),
        "odd-obstruction": lambda m: theorems.verify_odd_obstruction(m),
        "torsion": lambda m: theorems.verify_torsion_table(m, max_cosets, max_endo_letters),
        "background": lambda m: theorems.verify_background(m, max_cosets, max_endo_letters),
    }
    certs = [runners[claim](m) for m in values]

    if fmt == "machine":
        doc = {
            "tool_version": __version__,
            "config": config.as_dict(),
            "certificates": [c.as_dict() for c in certs],
        }
        _emit(to_json(doc), out)
    else:
        _emit("".join(_certificate_text(c) for c in certs), out)

    verdicts = {c.verdict for c in certs}
    if any(v is Verdict.INCONCLUSIVE for v in verdicts):
        ctx.exit(EXIT_INCONCLUSIVE)
    if not verdicts <= _EXPECTED:
        ctx.exit(EXIT_REFUTED)
    ctx.exit(EXIT_OK)


@main.command("normal-form")
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", type=str, required=True)
@click.option("--format", "fmt", type=click.Choice(("text", "machine")), default="text")
@click.option("--out", type=click.File("w"), default=None)
def normal_form_cmd(n, word_text, fmt, out):
    """Garside left-canonical form of a word."""
    if n < 2:
        raise click.UsageError("normal-form needs n >= 2")
    w = parse_word(word_text, n)
    nf = garside.normal_form(w)
    if fmt == "machine":
        doc = {
            "tool_version": __version__,
            "config": {"command": "normal-form", "n": n, "word": w.to_text(), "format": fmt},
            "normal_form": nf.as_dict(),
        }
        _emit(to_json(doc), out)
    else:
        factors = ", ".join(str(list(f)) for f in nf.factors)
        _emit(f"(Delta^{nf.delta_power}, [{factors}])\n", out)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", type=str, required=True)
@click.option("--target", type=click.Choice(("disk", "sphere")), default="disk", show_default=True)
@click.option(
    "--max-endo-letters", type=int, default=theorems.DEFAULT_MAX_IMAGE_LETTERS, show_default=True
)
@click.option("--format", "fmt", type=click.Choice(("text", "machine")), default="text")
@click.option("--out", type=click.File("w"), default=None)
@click.pass_context
def act(ctx, n, word_text, target, max_endo_letters, fmt, out):
    """Images of the free-group generators under a word's action."""
    if n < 2 or (target == "sphere" and n < 3):
        raise click.UsageError("act needs n >= 2 (n >= 3 for the sphere action)")
    w = parse_word(word_text, n)
    try:
        endo = (
            artin_disk_endo(w, max_endo_letters)
            if target == "disk"
            else sphere.sphere_endo(w, max_endo_letters)
        )
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        ctx.exit(EXIT_INCONCLUSIVE)
        return
    images = [" ".join(str(k) for k in img.letters) for img in endo.images]
    if fmt == "machine":
        doc = {
            "tool_version": __version__,
            "config": {
                "command": "act",
                "n": n,
                "word": w.to_text(),
                "target": target,
                "format": fmt,
            },
            "rank": endo.rank,
            "images": images,
        }
        _emit(to_json(doc), out)
    else:
        lines = [f"x{j} -> {img or '(empty)'}" for j, img in enumerate(images, start=1)]
        _emit("\n".join(lines) + "\n", out)


@main.command()
@click.option("--from", "n_from", type=int, default=3, show_default=True)
@click.option("--to", "n_to", type=int, default=7, show_default=True)
@click.option("--pairs", type=int, default=1000, show_default=True)
@click.option("--max-len", type=int, default=40, show_default=True)
@click.option("--seed", type=int, default=20240801, show_default=True)
@click.option("--format", "fmt", type=click.Choice(("text", "machine")), default="text")
@click.option("--out", type=click.File("w"), default=None)
@click.pass_context
def selftest(ctx, n_from, n_to, pairs, max_len, seed, fmt, out):
    """Cross-oracle agreement of the two exact engines on random pairs."""
    if n_from < 3 or n_to < n_from:
        raise click.UsageError("need 3 <= from <= to")
    try:
        report = run_cross_oracle(
            ns=range(n_from, n_to + 1), pairs=pairs, max_len=max_len, seed=seed
        )
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        ctx.exit(EXIT_INCONCLUSIVE)
        return
    if fmt == "machine":
        doc = {
            "tool_version": __version__,
            "config": {
                "command": "selftest",
                "from": n_from,
                "to": n_to,
                "pairs": pairs,
                "max_len": max_len,
                "seed": seed,
                "format": fmt,
            },
            "report": report.as_dict(),
        }
        _emit(to_json(doc), out)
    else:
        lines = []
        for n in sorted(report.pairs_per_n):
            lines.append(
                f"n={n}: {report.pairs_per_n[n]} pairs, engines agree on all, "
                f"{report.equal_pairs_per_n[n]} equal pairs"
            )
        lines.append(
            "sphere relations trivial: " + ("yes" if report.relations_ok else "NO")
        )
        lines.append("selftest " + ("PASS" if report.ok else "FAIL"))
        _emit("\n".join(lines) + "\n", out)
    ctx.exit(EXIT_OK if report.ok else EXIT_REFUTED)


def run(argv=None) -> int:
    """Programmatic entry point returning the exit code."""
    try:
        # outside standalone mode click returns ctx.exit codes instead of
        # raising SystemExit
        rv = main.main(args=argv, standalone_mode=False)
        return rv if isinstance(rv, int) else EXIT_OK
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_INTERNAL
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        return EXIT_INCONCLUSIVE
    except Exception as exc:  # pragma: no cover - defensive
        click.echo(f"internal error: {exc}", err=True)
        return EXIT_INTERNAL


def console():
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    console()
