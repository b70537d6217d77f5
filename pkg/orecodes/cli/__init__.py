"""Command-line surface: parsing, JSON schemas and command implementations."""

from cli.commands import cmd_code, cmd_ctx, cmd_dualcheck, cmd_residue_demo, cmd_selftest
from cli.parsing import load_subspaces, parse_context, parse_element, parse_elements, parse_subspace

__all__ = [
    "cmd_code",
    "cmd_ctx",
    "cmd_dualcheck",
    "cmd_residue_demo",
    "cmd_selftest",
    "load_subspaces",
    "parse_context",
    "parse_element",
    "parse_elements",
    "parse_subspace",
]
