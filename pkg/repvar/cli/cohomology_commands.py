"""Cocycles, cohomology dimensions, regularity and obstruction commands."""
from __future__ import annotations

import argparse
import logging

from repvar.cohomology_engine import (
    check_infinitesimal_regularity,
    cocycle_space,
    cohomology_dims,
    tangent_gap_report,
)
from repvar.deformation_engine import TruncatedDeformation, extend, verify
from repvar.errors import InputError
from repvar.representation_io import parse_cochain_file

from repvar.cli.common import CommandOutcome, load_module, load_presentation, load_rep, plain
from repvar.cli.schemas import JobSpec

logger = logging.getLogger(__name__)


def cocycles(job: JobSpec) -> CommandOutcome:
    p = load_presentation(job)
    rep = load_rep(job, p)
    space = cocycle_space(rep, load_module(job, rep))
    result = {
        "module": space.module.describe(),
        "dimension": space.dimension,
        "basis": [plain(space.assignment(i)) for i in range(space.dimension)],
    }
    return CommandOutcome(result)


def cohomology(job: JobSpec) -> CommandOutcome:
    p = load_presentation(job)
    rep = load_rep(job, p)
    module = load_module(job, rep)
    result = cohomology_dims(rep, module).to_dict()
    if job.known_local_dim is not None:
        if job.module != "ad-sl":
            raise InputError("--known-local-dim compares against the sl(n) adjoint module only")
        result["tangent_gap"] = tangent_gap_report(rep, job.known_local_dim).to_dict()
    return CommandOutcome(result)


def regularity(job: JobSpec) -> CommandOutcome:
    p = load_presentation(job)
    verdict = check_infinitesimal_regularity(load_rep(job, p), job.boundary_tori)
    return CommandOutcome(verdict.to_dict(), verdict=verdict.regular)


def obstruction(job: JobSpec) -> CommandOutcome:
    """Extend the truncated deformation in --cochain by --order further orders."""
    p = load_presentation(job)
    rep = load_rep(job, p)
    if job.cochain is None:
        raise InputError("obstruction needs --cochain")
    levels = parse_cochain_file(job.cochain, p, rep.order)
    deformation = TruncatedDeformation(rep, levels)
    verify(deformation)
    reached, last = extend(deformation, job.order)
    result = {
        "given_order": deformation.order,
        "reached_order": reached.order,
        "obstructed": last is not None and not last.extendable,
        "cochains": [[m.to_json() for m in level] for level in reached.cochains],
    }
    if last is not None:
        result["last_step"] = last.to_dict(p)
    return CommandOutcome(result, verdict=not result["obstructed"])


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("cocycles", parents=[common], help="basis of Z^1 for a module")
    sub.set_defaults(handler=cocycles)

    sub = subparsers.add_parser("cohomology", parents=[common], help="dimensions of H^0, Z^1, B^1, H^1, H^2")
    sub.add_argument("--known-local-dim", type=int, default=None,
                     help="local dimension of the variety, to report the tangent gap")
    sub.set_defaults(handler=cohomology)

    sub = subparsers.add_parser("regularity", parents=[common], help="infinitesimal regularity test")
    sub.add_argument("--boundary-tori", type=int, default=1)
    sub.set_defaults(handler=regularity)

    sub = subparsers.add_parser("obstruction", parents=[common], help="formal deformation obstructions")
    sub.add_argument("--cochain", required=True, help="file with u_1..u_k on each generator")
    sub.add_argument("--order", type=int, default=1, help="number of further orders to attempt")
    sub.set_defaults(handler=obstruction)
