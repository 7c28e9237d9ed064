from .dispatch import COMMANDS, RunOptions, run
from .parsing import build_pair, parse_rational, parse_space_spec, resolve_mu, serialize_space_spec
from .render import render_json, render_text

__all__ = [
    "COMMANDS", "RunOptions", "run",
    "build_pair", "parse_rational", "parse_space_spec", "resolve_mu", "serialize_space_spec",
    "render_json", "render_text",
]
