"""Commands on a single representation: check-rep, irreducible, character, metabelian."""
from __future__ import annotations

import argparse
import logging

import pandas as pd

from repvar.cohomology_engine import check_infinitesimal_regularity
from repvar.errors import InputError
from repvar.irreducibility import is_irreducible
from repvar.metabelian import build_metabelian, solve_metabelian_cocycles
from repvar.presentation_parser import parse_word_list
from repvar.representation import character_of
from repvar.representation_io import format_representation

from repvar.cli.common import CommandOutcome, load_presentation, load_rep, parse_scalar, plain
from repvar.cli.schemas import JobSpec

logger = logging.getLogger(__name__)


def check_rep(job: JobSpec) -> CommandOutcome:
    """Loading verifies shapes, determinants and relators; failures raise VerdictError."""
    p = load_presentation(job)
    rep = load_rep(job, p)
    result = rep.to_json()
    result["relators_verified"] = p.relator_count
    return CommandOutcome(result, verdict=True)


def irreducible(job: JobSpec) -> CommandOutcome:
    p = load_presentation(job)
    verdict = is_irreducible(load_rep(job, p))
    return CommandOutcome(verdict.to_json(p), verdict=verdict.irreducible)


def character(job: JobSpec) -> CommandOutcome:
    p = load_presentation(job)
    rep = load_rep(job, p)
    if not job.words:
        raise InputError("character needs --words")
    words = parse_word_list(job.words, p)
    chi = character_of(rep, words)
    labels = [p.format_word(w) for w in words]
    values = [str(v) for v in chi.values]
    table = pd.DataFrame({"word": labels, "trace": values})
    return CommandOutcome({"words": labels, "traces": values}, table=table)


def metabelian(job: JobSpec) -> CommandOutcome:
    """Twisted cocycles for (alpha, n); with --lambda also the SL_n representation of the first one."""
    p = load_presentation(job)
    alpha = parse_scalar(job, job.alpha, "--alpha")
    if job.n is None:
        raise InputError("metabelian needs --n")
    space = solve_metabelian_cocycles(p, alpha, job.n, job.field_order)
    result = {
        "alpha": str(alpha),
        "n": job.n,
        "dimension": space.dimension,
        "basis": [plain(space.assignment(i)) for i in range(space.dimension)],
    }
    if job.lam is not None:
        if not space.dimension:
            raise InputError("no twisted cocycle to build a representation from")
        lam = parse_scalar(job, job.lam, "--lambda")
        rep = build_metabelian(p, alpha, job.n, space.assignment(0), lam, order=job.field_order)
        regularity = check_infinitesimal_regularity(rep, job.boundary_tori)
        result["representation"] = format_representation(rep)
        result["irreducible"] = is_irreducible(rep).irreducible
        result["regularity"] = regularity.to_dict()
    return CommandOutcome(result)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("check-rep", parents=[common], help="verify a representation file")
    sub.set_defaults(handler=check_rep)

    sub = subparsers.add_parser("irreducible", parents=[common], help="Burnside irreducibility test")
    sub.set_defaults(handler=irreducible)

    sub = subparsers.add_parser("character", parents=[common], help="traces on a word list")
    sub.add_argument("--words", required=True, help="comma-separated words, e.g. 'x, y, x y^-1'")
    sub.set_defaults(handler=character)

    sub = subparsers.add_parser("metabelian", parents=[common], help="metabelian cocycles and representations")
    sub.add_argument("--alpha", required=True, help="nonzero field element alpha")
    sub.add_argument("--n", type=int, required=True, help="rank n >= 2")
    sub.set_defaults(handler=metabelian)
