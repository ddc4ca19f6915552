"""
One handler per subcommand. A handler returns the report to print and whether
the computation confirmed what it checks.
"""
import argparse
import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..abstract import StratifiedResolution, duality_check, hyperplane_oracle, random_blowup_checks, zeta_abstract
from ..config import Settings
from ..errors import InputError
from ..io import is_germ_document, parse_d, parse_germ, parse_rational, parse_stratified, read_document
from ..io.reports import (
    Report,
    batyrev_report,
    blowup_report,
    classification_report,
    comparison_report,
    discrepancy_report,
    duality_report,
    invariants_report,
    model_report,
    oracle_report,
    zeta_report,
)
from ..pipeline import GermPipeline
from ..stringy import compare_d_to_one, eval_or_limit_at_1
from ..surface import ResolutionGraph

logger = logging.getLogger(__name__)

Outcome = Tuple[Report, bool]
Handler = Callable[[argparse.Namespace, Settings], Outcome]


def load_input(path: str) -> Union[ResolutionGraph, StratifiedResolution]:
    """A germ document has "vertices"; anything else is read as stratified data."""
    document = read_document(path)
    if is_germ_document(document):
        return parse_germ(document)
    if "divisors" in document:
        return parse_stratified(document, name=Path(path).stem)
    raise InputError(f"{path}: neither a germ (\"vertices\") nor stratified data (\"divisors\")")


def _germ(args: argparse.Namespace) -> ResolutionGraph:
    data = load_input(args.input)
    if not isinstance(data, ResolutionGraph):
        raise InputError(f"{args.command} needs a germ document, {args.input} holds stratified data")
    return data


def _stratified(args: argparse.Namespace) -> StratifiedResolution:
    data = load_input(args.input)
    if not isinstance(data, StratifiedResolution):
        raise InputError(f"{args.command} needs stratified data, {args.input} holds a germ")
    return data


def _d(args: argparse.Namespace, settings: Settings) -> Fraction:
    return parse_d(args.d) if getattr(args, "d", None) is not None else settings.d


def run_discrepancies(args: argparse.Namespace, settings: Settings) -> Outcome:
    pipeline = GermPipeline(_germ(args))
    return discrepancy_report(pipeline.graph.name, pipeline.discrepancies), True


def run_classify(args: argparse.Namespace, settings: Settings) -> Outcome:
    pipeline = GermPipeline(_germ(args))
    return classification_report(pipeline.graph.name, pipeline.classification), True


def run_model(args: argparse.Namespace, settings: Settings) -> Outcome:
    pipeline = GermPipeline(_germ(args), _d(args, settings))
    if args.canonical:
        return model_report(pipeline.canonical_model, kind="canonical"), True
    return model_report(pipeline.minimal_model, kind="minimal"), True


def run_zeta(args: argparse.Namespace, settings: Settings) -> Outcome:
    level = args.level or settings.level
    data = load_input(args.input)
    if isinstance(data, StratifiedResolution):
        if args.d is not None:
            logger.warning("--d %s is ignored: %s holds stratified data with its own (nu, N)", args.d, args.input)
        z = zeta_abstract(data, level)
    else:
        z = GermPipeline(data, _d(args, settings)).zeta(level, canonical=args.canonical)
    at_one = eval_or_limit_at_1(z) if args.eval_s1 else None
    return zeta_report(z, at_one=at_one), True


def run_invariants(args: argparse.Namespace, settings: Settings) -> Outcome:
    pipeline = GermPipeline(_germ(args))
    return invariants_report(pipeline.graph.name, pipeline.invariants), True


def run_batyrev(args: argparse.Namespace, settings: Settings) -> Outcome:
    level = args.level or settings.level
    pipeline = GermPipeline(_germ(args))
    return batyrev_report(pipeline.graph.name, level, pipeline.batyrev(level)), True


def run_check_duality(args: argparse.Namespace, settings: Settings) -> Outcome:
    report = duality_check(_stratified(args))
    return duality_report(report), report.passed and report.closed_form_agrees


def run_check_blowup(args: argparse.Namespace, settings: Settings) -> Outcome:
    graph = _germ(args)
    trials = args.trials if args.trials is not None else settings.trials
    seed = args.seed if args.seed is not None else settings.seed
    checks = random_blowup_checks(graph, _d(args, settings), trials=trials, seed=seed)
    failures = [check for check in checks if not check.passed]
    if failures:
        logger.warning("%d of %d blow-up checks failed on %s", len(failures), len(checks), graph.name)
    return blowup_report(graph.name, checks), not failures


def _weights(values: Optional[List[str]], m: int, name: str, draw: Callable[[], Fraction]) -> List[Fraction]:
    if values is None:
        return [draw() for _ in range(m)]
    if len(values) != m:
        raise InputError(f"--{name} needs exactly m = {m} values")
    return [parse_rational(value, field=name) for value in values]


def run_oracle(args: argparse.Namespace, settings: Settings) -> Outcome:
    if args.r < 2 or not 0 <= args.m <= args.r:
        raise InputError("oracle-am needs r >= 2 and 0 <= m <= r")
    rng = random.Random(args.seed if args.seed is not None else settings.seed)
    k = _weights(args.k, args.m, "k", lambda: Fraction(rng.randint(1, 6), rng.randint(1, 3)))
    dwt = _weights(args.dwt, args.m, "dwt", lambda: Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    result = hyperplane_oracle(args.r, args.m, k, dwt)
    return oracle_report(args.r, args.m, result), result.equal


def run_compare_d(args: argparse.Namespace, settings: Settings) -> Outcome:
    comparison = compare_d_to_one(_germ(args))
    return comparison_report(comparison), True


HANDLERS: Dict[str, Handler] = {
    "discrepancies": run_discrepancies,
    "classify": run_classify,
    "model": run_model,
    "zeta": run_zeta,
    "veys": run_invariants,
    "invariants": run_invariants,
    "batyrev": run_batyrev,
    "check-duality": run_check_duality,
    "check-blowup": run_check_blowup,
    "oracle-am": run_oracle,
    "compare-d": run_compare_d,
}
