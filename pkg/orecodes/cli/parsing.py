"""Command-line element syntax.

- Finite field elements: comma-separated ascending integer coefficients ("1,2" = 1 + 2i)
- Rational functions: "num/den" with ascending coefficient lists ("0,1/1" = t)
- Lists of elements (points, polynomial coefficients): separated by ";"
- Subspace files: JSON list with one entry per point, each a list of spanning
  elements (encodings or strings), or "K" for the whole field
"""

import json
from pathlib import Path
from typing import Any, List, Optional

from core.errors import ParameterError, ShapeMismatch
from fields.base import FieldElement
from ore.context import OreContext, make_differential_context, make_frobenius_context
from evaluation.subspace import Subspace


def parse_context(args) -> OreContext:
    """Context from --kind, --p, --e, --s, --twist, --modulus and --a."""
    if args.kind == "frobenius":
        twist = args.twist if args.twist is not None else 0
        return make_frobenius_context(args.p, args.e, args.s, twist, parse_modulus(args.modulus))
    if args.kind == "differential":
        return make_differential_context(args.p, args.a if args.a is not None else 1)
    raise ParameterError(f"unknown context kind: {args.kind}")


def parse_modulus(text: Optional[str]) -> Optional[List[int]]:
    """Comma-separated ascending integer coefficients, or None."""
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ParameterError(f"cannot parse modulus {text!r}: {e}")


def parse_element(ctx: OreContext, text: Any) -> FieldElement:
    try:
        return ctx.K.decode(text)
    except (ValueError, TypeError) as e:
        raise ParameterError(f"cannot parse field element {text!r}: {e}")


def parse_elements(ctx: OreContext, text: str) -> List[FieldElement]:
    """';'-separated elements."""
    parts = [part.strip() for part in text.split(";") if part.strip()]
    if not parts:
        raise ParameterError("empty element list")
    return [parse_element(ctx, part) for part in parts]


def parse_subspace(ctx: OreContext, entry: Any) -> Subspace:
    if isinstance(entry, str):
        if entry.strip().upper() == "K":
            return Subspace.full(ctx)
        raise ParameterError(f"unknown subspace shorthand {entry!r}")
    if not isinstance(entry, list):
        raise ParameterError(f"subspace entry must be a list of elements, got {entry!r}")
    return Subspace.span(ctx, [parse_element(ctx, x) for x in entry])


def load_subspaces(ctx: OreContext, path: str, m: int) -> List[Subspace]:
    """Read one subspace per point from a JSON file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ParameterError(f"cannot read subspace file {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParameterError(f"subspace file {path} is not valid JSON: {e}")
    if not isinstance(data, list):
        raise ParameterError("subspace file must hold a JSON list")
    if len(data) != m:
        raise ShapeMismatch(f"{len(data)} subspaces for {m} points")
    return [parse_subspace(ctx, entry) for entry in data]
