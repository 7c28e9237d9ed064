import logging
import sys
from typing import Annotated, NoReturn, Optional

import click
import typer

from commands import RunOptions, parse_rational, parse_space_spec, render_json, render_text, run
from engine import config
from engine.errors import EXIT_USAGE, EXIT_VERIFICATION_FAILED, SpectraError
from model import GkrsPayload

app = typer.Typer(
    name="coset-spectra",
    help="Exact Laplacian spectra and multiplet checks on equal-rank homogeneous spaces G/H.",
    add_completion=False,
    no_args_is_help=True,
)

SpecArgument = Annotated[str, typer.Argument(help="Query such as 'B3/D3;mu=1/2,1/2,1/2'.")]
LinesOption = Annotated[Optional[int], typer.Option("--lines", min=1, help="Number of spectral lines.")]
DimBoundOption = Annotated[int, typer.Option("--dim-bound", min=1, help="Largest dim V_lambda in a sweep.")]
JsonOption = Annotated[bool, typer.Option("--json", help="Emit the report as JSON.")]
ScaleOption = Annotated[Optional[str], typer.Option("--scale", help="Landau prefactor p/q; overrides the query.")]
WeylLimitOption = Annotated[Optional[int], typer.Option("--weyl-limit", min=1, help="Cap on Weyl group size.")]
ProvenanceOption = Annotated[bool, typer.Option("--provenance", help="Append version and normalization.")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging on stderr.")]


def _fail(detail: str, code: int) -> NoReturn:
    typer.echo(f"error: {detail}", err=True)
    raise typer.Exit(code)


def _execute(
    command: str,
    spec_text: str,
    *,
    lines: Optional[int] = None,
    dim_bound: int = config.DEFAULT_DIM_BOUND,
    as_json: bool = False,
    scale: Optional[str] = None,
    weyl_limit: Optional[int] = None,
    provenance: bool = False,
    verbose: bool = False,
) -> None:
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True
        )

    try:
        spec = parse_space_spec(spec_text)
        if scale is not None:
            spec = spec.model_copy(update={"scale": parse_rational(scale)})
    except SpectraError as exc:
        _fail(exc.detail, EXIT_USAGE)
    if spec.scale <= 0:
        _fail(f"scale must be positive, got {spec.scale}", EXIT_USAGE)

    options = RunOptions(lines=lines, dim_bound=dim_bound, weyl_limit=weyl_limit, provenance=provenance)
    try:
        report = run(command, spec, options)
    except SpectraError as exc:
        _fail(exc.detail, exc.exit_code)

    typer.echo(render_json(report) if as_json else render_text(report))
    if isinstance(report.payload, GkrsPayload) and not report.payload.all_verified:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


def spectrum(
    spec: SpecArgument,
    lines: LinesOption = None,
    as_json: JsonOption = False,
    scale: ScaleOption = None,
    weyl_limit: WeylLimitOption = None,
    provenance: ProvenanceOption = False,
    verbose: VerboseOption = False,
):
    """First spectral lines in increasing energy, after Landau scaling."""
    _execute(
        "spectrum", spec, lines=lines, as_json=as_json, scale=scale,
        weyl_limit=weyl_limit, provenance=provenance, verbose=verbose,
    )


def lowest(
    spec: SpecArgument,
    as_json: JsonOption = False,
    scale: ScaleOption = None,
    weyl_limit: WeylLimitOption = None,
    provenance: ProvenanceOption = False,
    verbose: VerboseOption = False,
):
    """Lowest level by Weyl conjugation and by Frobenius reciprocity, labeled."""
    _execute(
        "lowest", spec, as_json=as_json, scale=scale,
        weyl_limit=weyl_limit, provenance=provenance, verbose=verbose,
    )


def gkrs_check(
    spec: SpecArgument,
    dim_bound: DimBoundOption = config.DEFAULT_DIM_BOUND,
    as_json: JsonOption = False,
    weyl_limit: WeylLimitOption = None,
    provenance: ProvenanceOption = False,
    verbose: VerboseOption = False,
):
    """Verify the multiplet identity for every lambda up to a dimension bound; exit 3 on failure."""
    _execute(
        "gkrs-check", spec, dim_bound=dim_bound, as_json=as_json,
        weyl_limit=weyl_limit, provenance=provenance, verbose=verbose,
    )


def weyl_info(
    spec: SpecArgument,
    as_json: JsonOption = False,
    weyl_limit: WeylLimitOption = None,
    provenance: ProvenanceOption = False,
    verbose: VerboseOption = False,
):
    """|W_g|, |W_eta|, |C|, both Weyl vectors and the complement roots."""
    _execute(
        "weyl-info", spec, as_json=as_json,
        weyl_limit=weyl_limit, provenance=provenance, verbose=verbose,
    )


# Register commands
app.command("spectrum")(spectrum)
app.command("lowest")(lowest)
app.command("gkrs-check")(gkrs_check)
app.command("weyl-info")(weyl_info)


def main() -> None:
    """Console entry point; click usage errors exit 1 like malformed queries."""
    try:
        code = app(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_USAGE)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
