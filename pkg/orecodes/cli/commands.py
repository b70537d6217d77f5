"""Command implementations: ctx, code, dualcheck, residue-demo and selftest.

Each command prints one JSON document on stdout and returns the exit code.
Errors derived from OreCodesError propagate to main, which maps them to
their exit codes.
"""

import asyncio
import logging
import sys
from typing import Any, List

from config import get_settings
from core.errors import VerificationFailure
from core.results import CheckStatus
from ore.central import CentralPoly
from ore.fraction import OreFraction
from ore.polynomial import OrePoly
from duality.pairing import gram
from residues.taylor import residue_sum
from codes.distance import min_distance_async
from codes.duality import check_duality
from codes.families import lg_basis, lrs_basis
from codes.hom import CodeBasis
from verification.runner import run_selftest
from cli.parsing import load_subspaces, parse_context, parse_elements
from cli.schemas import (
    CodeReport,
    ContextDescriptor,
    ContextReport,
    DualCheckReport,
    HomTupleModel,
    PairingReport,
    ResidueReport,
    SelftestReport,
    SuiteReport,
)


# Configure logging
logger = logging.getLogger(__name__)


def emit(model) -> None:
    """Write a report to stdout."""
    sys.stdout.write(model.model_dump_json(indent=2) + "\n")
    sys.stdout.flush()


def cmd_ctx(args) -> int:
    ctx = parse_context(args)
    K = ctx.K
    report = ContextReport(
        descriptor=ContextDescriptor.from_context(ctx),
        s=ctx.s,
        centre=ctx.centre.encode(),
        z_coeffs=[K.encode(z) for z in ctx.z_coeffs] if ctx.z_coeffs is not None else None,
        basis=[K.encode(b) for b in ctx.basis],
        gram=[[K.encode(x) for x in row] for row in gram(ctx).rows],
    )
    emit(report)
    return 0


def _code_report(code: CodeBasis, distance: Any = None) -> CodeReport:
    data = code.to_dict()
    return CodeReport(
        kind=data["kind"],
        k=data["k"],
        n=data["n"],
        dimension=data["dimension"],
        points=data["points"],
        subspaces=data["subspaces"],
        generators=[HomTupleModel(**g) for g in data["generators"]],
        distance=distance,
        msrd=None if distance is None else distance == code.n - code.k + 1,
    )


def cmd_code(args) -> int:
    settings = get_settings()
    ctx = parse_context(args)
    points = parse_elements(ctx, args.points)
    subspaces = load_subspaces(ctx, args.subspaces, len(points))
    build = lrs_basis if args.family == "lrs" else lg_basis
    code = build(ctx, args.k, points, subspaces)

    distance = None
    if args.check == "msrd":
        distance = asyncio.run(min_distance_async(code, settings))
        logger.info(f"[Codes] {args.family} n={code.n} k={code.k} d={distance}")
    emit(_code_report(code, distance))
    return 0


def cmd_dualcheck(args) -> int:
    ctx = parse_context(args)
    K = ctx.K
    points = parse_elements(ctx, args.points)
    subspaces = load_subspaces(ctx, args.subspaces, len(points))
    result = check_duality(ctx, args.k, points, subspaces, corrupt=args.corrupt)

    pairings: List[PairingReport] = [
        PairingReport(lg_index=i, lrs_index=j, value=K.encode(v))
        for i, row in enumerate(result.pairings)
        for j, v in enumerate(row)
    ]
    emit(DualCheckReport(
        k=result.k,
        n=result.n,
        lrs_dimension=result.lrs_dimension,
        lg_dimension=result.lg_dimension,
        dual_points=result.metadata["dual_points"],
        pairings=pairings,
        all_zero=result.all_zero,
        dimensions_sum=result.dimensions_sum,
        matches_dual=result.matches_dual,
        corrupted=result.corrupted,
        passed=result.ok,
    ))
    if not result.ok:
        logger.error(f"[Duality] check failed for k={result.k}, n={result.n}")
        return VerificationFailure.exit_code
    return 0


def cmd_residue_demo(args) -> int:
    ctx = parse_context(args)
    K = ctx.K
    num = OrePoly(ctx, parse_elements(ctx, args.num))
    den = CentralPoly(ctx, parse_elements(ctx, args.den))
    result = residue_sum(OreFraction(num, den))
    emit(ResidueReport(
        points=[K.encode(z) for z in result.points],
        values=[K.encode(v) for v in result.values],
        total=K.encode(result.total),
        asserted=result.asserted,
        unasserted=not result.asserted,
    ))
    if not result.ok:
        logger.error(f"[Taylor] residue sum is {result.total!r} although the degree hypothesis holds")
        return VerificationFailure.exit_code
    return 0


def cmd_selftest(args) -> int:
    settings = get_settings()
    seed = args.seed if args.seed is not None else settings.seed
    results = run_selftest(args.suites, settings=settings, seed=seed)
    suites = [
        SuiteReport(
            number=r.metadata.get("number", 0),
            name=r.name,
            status=r.status.value,
            checked=r.checked,
            error=r.error,
            seconds=r.metadata.get("seconds"),
        )
        for r in results
    ]
    passed = all(r.status != CheckStatus.FAILED for r in results)
    emit(SelftestReport(seed=seed, trials=settings.trials, suites=suites, passed=passed))
    return 0 if passed else VerificationFailure.exit_code
