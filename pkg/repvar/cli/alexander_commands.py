"""Twisted Alexander polynomials and the deformation conditions built on them."""
from __future__ import annotations

import argparse
import logging

from repvar.alexander_engine import (
    alexander_polynomials,
    deformation_condition_general,
    deformation_condition_n2,
    evaluate_root,
    sym_power_condition,
)
from repvar.constructions import trivial_representation

from repvar.cli.common import CommandOutcome, hom_paths, load_module, load_presentation, load_rep, parse_scalar
from repvar.cli.schemas import JobSpec

logger = logging.getLogger(__name__)


def alexander(job: JobSpec) -> CommandOutcome:
    """Delta_0 and Delta_1 of --module over --rep, or the classical polynomial without --rep."""
    p = load_presentation(job)
    if job.rep is None:
        rep = trivial_representation(p, 1, job.field_order)
        data = alexander_polynomials(rep)
    else:
        rep = load_rep(job, p)
        data = alexander_polynomials(rep, load_module(job, rep))
    result = data.to_dict()
    result["evaluations"] = []
    if job.lam is not None:
        point = parse_scalar(job, job.lam, "--lambda")
        evaluation = evaluate_root(data.delta1, point)
        result["evaluations"].append({
            "lambda": str(point),
            "value": str(evaluation.value),
            "is_root": evaluation.is_root,
            "is_simple": evaluation.is_simple_root,
        })
    return CommandOutcome(result)


def deform_condition(job: JobSpec) -> CommandOutcome:
    """Rank 2 test by default; --sym-power N or --module hom:A,B select the other criteria."""
    p = load_presentation(job)
    lam = parse_scalar(job, job.lam, "--lambda")
    paths = hom_paths(job)
    if paths is not None:
        alpha, beta = (load_rep(job, p, path) for path in paths)
        verdict = deformation_condition_general(alpha, beta, lam)
        return CommandOutcome(verdict.to_dict(), verdict=verdict.necessary_condition)
    if job.sym_power is not None:
        sym = sym_power_condition(p, lam, job.sym_power, job.field_order)
        return CommandOutcome(sym.to_dict(), verdict=sym.hypotheses_hold)
    n2 = deformation_condition_n2(p, lam, job.field_order)
    return CommandOutcome(n2.to_dict(), verdict=n2.deformable)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("alexander", parents=[common], help="twisted Alexander polynomials")
    sub.set_defaults(handler=alexander)

    sub = subparsers.add_parser("deform-condition", parents=[common], help="deformability of reducible representations")
    sub.add_argument("--sym-power", type=int, default=None, help="test the n-th symmetric power criterion")
    sub.set_defaults(handler=deform_condition)
