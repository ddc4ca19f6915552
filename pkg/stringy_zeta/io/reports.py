"""
Text, LaTeX and JSON reports for every CLI result.

Each builder returns a Report holding the JSON payload together with the text
and LaTeX lines; ``render`` picks one. Output depends only on the values, so
identical invocations print identical bytes.
"""
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from ..abstract.duality import DualityReport
from ..abstract.from_germ import BlowupCheck
from ..abstract.oracle import OracleResult
from ..mmp import DivisorData, PartialModel
from ..stringy.comparison import DComparison
from ..stringy.invariants import SurfaceInvariants
from ..stringy.zeta import StringyZeta
from ..surface.discrepancies import Classification, DiscrepancyVector
from ..surface.modifications import EdgeSite, Site
from ..symbolic import LaurentExpr, PoleReport, RationalExpr, UniRationalFn
from ..symbolic.render import (
    format_rational,
    laurent_to_json,
    laurent_to_latex,
    laurent_to_text,
    to_json,
    to_latex,
    to_text,
    uni_to_json,
    uni_to_latex,
    uni_to_text,
)

Value = Union[RationalExpr, UniRationalFn, LaurentExpr, Fraction, PoleReport]


class Format(str, Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


@dataclass(frozen=True)
class Report:
    payload: Dict[str, Any]
    text: Tuple[str, ...]
    latex: Tuple[str, ...]


def render(report: Report, fmt: Union[Format, str] = Format.TEXT) -> str:
    fmt = Format(fmt)
    if fmt is Format.JSON:
        return json.dumps(report.payload, indent=2, sort_keys=True) + "\n"
    lines = report.text if fmt is Format.TEXT else report.latex
    return "\n".join(lines) + "\n"


# Values

def value_text(value: Value) -> str:
    if isinstance(value, PoleReport):
        return f"pole of order {value.order}"
    if isinstance(value, RationalExpr):
        return to_text(value)
    if isinstance(value, UniRationalFn):
        return uni_to_text(value)
    if isinstance(value, LaurentExpr):
        return laurent_to_text(value)
    return format_rational(value)


def value_latex(value: Value) -> str:
    if isinstance(value, PoleReport):
        return f"\\text{{pole of order }} {value.order}"
    if isinstance(value, RationalExpr):
        return to_latex(value)
    if isinstance(value, UniRationalFn):
        return uni_to_latex(value)
    if isinstance(value, LaurentExpr):
        return laurent_to_latex(value)
    return laurent_to_latex(LaurentExpr.constant(value))


def value_json(value: Value) -> Any:
    if isinstance(value, PoleReport):
        return {"pole_order": value.order}
    if isinstance(value, RationalExpr):
        return to_json(value)
    if isinstance(value, UniRationalFn):
        return uni_to_json(value)
    if isinstance(value, LaurentExpr):
        return laurent_to_json(value)
    return format_rational(value)


def _value_report(value: Value, payload: Dict[str, Any]) -> Report:
    payload = dict(payload, value=value_json(value), text=value_text(value))
    return Report(payload=payload, text=(value_text(value),), latex=(value_latex(value),))


def _table_json(rows: Iterable[DivisorData]) -> List[Dict[str, str]]:
    return [
        {
            "id": row.id,
            "kind": row.kind,
            "nu": format_rational(row.nu),
            "N": format_rational(row.N),
            "a": format_rational(row.a),
        }
        for row in rows
    ]


def _table_text(rows: Sequence[DivisorData]) -> List[str]:
    lines = [f"{'id':<8} {'kind':<11} {'nu':>8} {'N':>8} {'a':>8}"]
    for row in rows:
        lines.append(
            f"{row.id:<8} {row.kind:<11} {format_rational(row.nu):>8} "
            f"{format_rational(row.N):>8} {format_rational(row.a):>8}"
        )
    return lines


def _table_latex(rows: Sequence[DivisorData]) -> List[str]:
    lines = ["\\begin{tabular}{llrrr}", "divisor & kind & $\\nu$ & $N$ & $a$ \\\\"]
    for row in rows:
        cells = [value_latex(Fraction(x)) for x in (row.nu, row.N, row.a)]
        lines.append(f"${row.id}$ & {row.kind} & ${cells[0]}$ & ${cells[1]}$ & ${cells[2]}$ \\\\")
    lines.append("\\end{tabular}")
    return lines


# Surface

def discrepancy_report(name: str, vector: DiscrepancyVector) -> Report:
    rows = [(key, "curve", value) for key, value in vector.vertices]
    rows += [(key, "branch", value) for key, value in vector.branches]
    payload = {
        "germ": name,
        "discrepancies": [{"id": key, "kind": kind, "a": format_rational(value)} for key, kind, value in rows],
    }
    text = tuple(f"{key} {format_rational(value)}" for key, _, value in rows)
    latex = tuple(f"a_{{{key}}} = {value_latex(value)}" for key, _, value in rows)
    return Report(payload=payload, text=text, latex=latex)


def classification_report(name: str, classification: Classification) -> Report:
    value = classification.value
    return Report(payload={"germ": name, "classification": value}, text=(value,), latex=(f"\\text{{{value}}}",))


# MMP

def model_report(model: PartialModel, *, kind: str = "minimal") -> Report:
    """Contracted set, (nu, N, a) table, log intersections on the model and pull-backs."""
    contracted = list(model.contracted)
    intersections = [(key, value) for key, value in model.intersections]
    pullbacks = {key: {curve: format_rational(c) for curve, c in coefficients} for key, coefficients in model.pullbacks}
    payload = {
        "germ": model.base.name,
        "model": kind,
        "d": format_rational(model.d),
        "contracted": contracted,
        "remaining": list(model.remaining),
        "table": _table_json(model.divisors),
        "log_intersections": {key: format_rational(value) for key, value in intersections},
        "pullbacks": pullbacks,
    }
    text = [
        f"{kind} model of {model.base.name} at d = {format_rational(model.d)}",
        "contracted: " + (", ".join(contracted) if contracted else "(none)"),
    ]
    text += _table_text(model.divisors)
    for key, value in intersections:
        text.append(f"(K + B + dF).{key} = {format_rational(value)}")
    latex = [f"S = \\{{{', '.join(contracted)}\\}}"] + _table_latex(model.divisors)
    return Report(payload=payload, text=tuple(text), latex=tuple(latex))


# Zeta functions

def zeta_report(z: StringyZeta, *, at_one: Optional[Value] = None) -> Report:
    """
    The zeta function with its metadata; with ``at_one`` the value at s = 1
    replaces the function in the text and LaTeX output.
    """
    payload: Dict[str, Any] = {
        "name": z.name,
        "level": z.level.value,
        "d": None if z.d is None else format_rational(z.d),
        "contracted": list(z.contracted),
        "table": _table_json(z.table),
        "zeta": value_json(z.value),
        "text": value_text(z.value),
    }
    if at_one is None:
        return Report(payload=payload, text=(value_text(z.value),), latex=(value_latex(z.value),))
    payload["at_s1"] = value_json(at_one)
    payload["at_s1_text"] = value_text(at_one)
    return Report(payload=payload, text=(value_text(at_one),), latex=(value_latex(at_one),))


def batyrev_report(name: str, level: str, value: Value) -> Report:
    return _value_report(value, {"germ": name, "level": level})


def invariants_report(name: str, invariants: SurfaceInvariants) -> Report:
    symbols = {
        key: {"genus": symbol.genus, "hodge": laurent_to_text(symbol.hodge), "euler": format_rational(symbol.euler)}
        for key, symbol in sorted(invariants.symbols.items())
    }
    payload = {
        "germ": name,
        "motivic": to_json(invariants.motivic),
        "motivic_text": to_text(invariants.motivic),
        "euler": format_rational(invariants.euler),
        "symbols": symbols,
        "minimal_resolution": list(invariants.minimal.ids),
        "was_minimal": invariants.was_minimal,
    }
    text = (
        f"E(X) = {to_text(invariants.motivic)}",
        f"e(X) = {format_rational(invariants.euler)}",
    )
    latex = (
        f"\\mathcal{{E}}(X) = {to_latex(invariants.motivic)}",
        f"e(X) = {value_latex(invariants.euler)}",
    )
    return Report(payload=payload, text=text, latex=latex)


def comparison_report(comparison: DComparison) -> Report:
    limit = None if comparison.limit is None else uni_to_text(comparison.limit)
    payload = {
        "germ": comparison.name,
        "contracted_near_one": list(comparison.contracted_near_one),
        "contracted_at_one": list(comparison.contracted_at_one),
        "z_d": str(comparison.z_d),
        "limit": limit,
        "at_one": uni_to_text(comparison.at_one),
        "agrees": comparison.agrees,
        "nu_N_agrees": comparison.nu_N_agrees,
    }
    verdict = "agree" if comparison.agrees else "differ"
    text = (
        f"z_d(s) = {comparison.z_d}",
        f"lim d->1: {limit if limit is not None else 'undefined'}",
        f"z(s) at d = 1: {uni_to_text(comparison.at_one)}",
        f"{verdict} (nu, N {'agree' if comparison.nu_N_agrees else 'differ'})",
    )
    latex = (
        f"z_d(s) = {sympy.latex(comparison.z_d)}",
        f"z(s) = {uni_to_latex(comparison.at_one)}",
        f"\\text{{{verdict}}}",
    )
    return Report(payload=payload, text=text, latex=latex)


# Abstract checks

def duality_report(report: DualityReport) -> Report:
    verdict = "holds" if report.passed else "fails"
    payload: Dict[str, Any] = {
        "name": report.name,
        "passed": report.passed,
        "closed_form_agrees": report.closed_form_agrees,
        "zeta": to_json(report.value),
        "residual": None if report.residual is None else to_json(report.residual),
    }
    text = [f"duality {verdict}", f"Z = {to_text(report.value)}"]
    if report.residual is not None:
        text.append(f"residual = {to_text(report.residual)}")
    text.append("closed-strata form " + ("agrees" if report.closed_form_agrees else "differs"))
    latex = [f"\\text{{duality {verdict}}}", f"Z = {to_latex(report.value)}"]
    return Report(payload=payload, text=tuple(text), latex=tuple(latex))


def _site_text(site: Site) -> str:
    if isinstance(site, EdgeSite):
        return f"{site.first}-{site.second}#{site.index}"
    return site.vertex


def blowup_report(name: str, checks: Sequence[BlowupCheck]) -> Report:
    entries = [
        {
            "site": _site_text(check.site),
            "new": check.new_id,
            "divisors_agree": check.divisors_agree,
            "strata_agree": check.strata_agree,
            "zeta_agree": {level.value: ok for level, ok in check.zeta_agree},
            "passed": check.passed,
        }
        for check in checks
    ]
    failures = sum(1 for check in checks if not check.passed)
    payload = {"germ": name, "trials": len(checks), "failures": failures, "checks": entries}
    text = [f"{entry['site']} -> {entry['new']}: {'ok' if entry['passed'] else 'FAILED'}" for entry in entries]
    text.append(f"{len(checks) - failures}/{len(checks)} blow-ups passed")
    latex = [f"\\text{{{len(checks) - failures} of {len(checks)} blow-ups passed}}"]
    return Report(payload=payload, text=tuple(text), latex=tuple(latex))


def oracle_report(r: int, m: int, result: OracleResult) -> Report:
    payload = {
        "r": r,
        "m": m,
        "bruteforce": to_json(result.bruteforce),
        "closedform": to_json(result.closedform),
        "equal": result.equal,
    }
    text = (
        f"brute force: {to_text(result.bruteforce)}",
        f"closed form: {to_text(result.closedform)}",
        "equal" if result.equal else "DIFFERENT",
    )
    latex = (to_latex(result.bruteforce), to_latex(result.closedform))
    return Report(payload=payload, text=text, latex=latex)
