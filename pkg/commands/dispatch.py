import logging
from typing import Literal, Optional

from pydantic import BaseModel, Field

from engine import config
from model import Provenance, Report, SpaceSpec

from .gkrs_check import run_gkrs_check
from .lowest import run_lowest
from .parsing import build_pair, serialize_space_spec
from .spectrum import run_spectrum
from .weyl_info import run_weyl_info

logger = logging.getLogger(__name__)

Command = Literal["spectrum", "lowest", "gkrs-check", "weyl-info"]
COMMANDS: tuple[str, ...] = ("spectrum", "lowest", "gkrs-check", "weyl-info")


class RunOptions(BaseModel):
    lines: Optional[int] = Field(default=None, gt=0)
    dim_bound: int = Field(default=config.DEFAULT_DIM_BOUND, gt=0)
    weyl_limit: Optional[int] = Field(default=None, gt=0)
    provenance: bool = False


def run(command: Command, spec: SpaceSpec, options: Optional[RunOptions] = None) -> Report:
    """
    Execute one command against a parsed query.

    Args:
        command: spectrum, lowest, gkrs-check or weyl-info
        spec: the parsed query
        options: line count, sweep bound, Weyl cap and provenance flag

    Returns:
        Report echoing the query, carrying the command payload and, on request,
        the provenance block

    Raises:
        SpectraError: anything raised by the engine, passed through unchanged
    """
    options = options or RunOptions()
    with config.weyl_limit_override(options.weyl_limit):
        pair = build_pair(spec)
        logger.debug("running %s on %s", command, pair.label)
        if command == "spectrum":
            payload = run_spectrum(pair, spec, options.lines or config.spectrum_lines())
        elif command == "lowest":
            payload = run_lowest(pair, spec)
        elif command == "gkrs-check":
            payload = run_gkrs_check(pair, options.dim_bound)
        elif command == "weyl-info":
            payload = run_weyl_info(pair)
        else:
            raise ValueError(f"unknown command {command!r}")

    provenance = None
    if options.provenance:
        provenance = Provenance(version=config.VERSION, normalization=config.NORMALIZATION_NOTE)
    return Report(
        command=command,
        query=serialize_space_spec(spec),
        spec=spec,
        payload=payload,
        provenance=provenance,
    )
