"""
Abstract stratified resolution documents:

    {"name"?, "dimension", "complete",
     "divisors": [{"id", "nu", "N"}],
     "symbols": [{"id", "genus"} | {"id", "hodge", "euler"}],
     "strata": [{"divisors": [ids], "euler"?, "hodge"?, "symbolic"?}]}

A divisor may give "a" in place of "N", with N = a - nu. Class strings use the
text notation of the renderers: caret exponents, parenthesized rational
exponents and [C] for stratum symbols.
"""
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import sympy
from sympy.core.sympify import SympifyError

from ..abstract.stratified import StratifiedResolution, StratumClass, create_stratified_resolution
from ..errors import InputError
from ..symbolic import StratumSymbol
from ..symbolic.laurent import VARIABLES, LaurentExpr, laurent_sum
from ..symbolic.render import laurent_to_text
from ..symbolic.univariate import to_fraction
from .germ_json import read_document
from .rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)

SYMBOL_PATTERN = re.compile(r"\[([A-Za-z_][A-Za-z0-9_]*)\]")
SYMBOL_PREFIX = "sym__"


def parse_laurent(text: str, *, field: str = "class") -> LaurentExpr:
    """
    Parse a Laurent polynomial in L, T, u, v and bracketed stratum symbols.

    Raises:
        InputError: if the string is not such a polynomial with rational coefficients
    """
    if not isinstance(text, str):
        raise InputError(f"{field}: expected a string, got {text!r}")
    source = SYMBOL_PATTERN.sub(lambda match: SYMBOL_PREFIX + match.group(1), text.replace("^", "**"))
    generators = {name: sympy.Symbol(name) for name in VARIABLES}
    try:
        expression = sympy.sympify(source, locals=dict(generators))
    except (SympifyError, SyntaxError, TypeError) as error:
        raise InputError(f"{field}: cannot parse {text!r}") from error

    summands = []
    for term in sympy.Add.make_args(sympy.expand(expression)):
        coefficient, factors = term.as_coeff_mul()
        if not coefficient.is_Rational:
            raise InputError(f"{field}: coefficient {coefficient} of {text!r} is not rational")
        exponents: Dict[str, Fraction] = {}
        symbols: Dict[str, int] = {}
        for factor in factors:
            base, exponent = factor.as_base_exp()
            if not (base.is_Symbol and exponent.is_Rational):
                raise InputError(f"{field}: {factor} in {text!r} is not a monomial factor")
            name = str(base)
            if name in generators:
                exponents[name] = exponents.get(name, Fraction(0)) + to_fraction(exponent)
            elif name.startswith(SYMBOL_PREFIX) and exponent.is_Integer and exponent >= 0:
                symbols[name[len(SYMBOL_PREFIX):]] = int(exponent)
            else:
                raise InputError(f"{field}: unexpected {factor} in {text!r}")
        summands.append(LaurentExpr.monomial(to_fraction(coefficient), symbols=symbols, **exponents))
    return laurent_sum(summands)


def _symbol(entry: Mapping[str, Any], where: str) -> StratumSymbol:
    name = entry.get("id")
    if not isinstance(name, str) or not SYMBOL_PATTERN.fullmatch(f"[{name}]"):
        raise InputError(f"{where}: symbol ids are identifiers, got {name!r}")
    try:
        if "genus" in entry:
            genus = entry["genus"]
            if isinstance(genus, bool) or not isinstance(genus, int):
                raise InputError(f"{where}.genus: expected an integer")
            return StratumSymbol.curve(name, genus)
        if "hodge" not in entry or "euler" not in entry:
            raise InputError(f"{where}: a symbol needs a genus or both hodge and euler")
        return StratumSymbol(
            name=name,
            hodge=parse_laurent(entry["hodge"], field=f"{where}.hodge"),
            euler=parse_rational(entry["euler"], field=f"{where}.euler"),
        )
    except ValueError as error:
        raise InputError(f"{where}: {error}") from error


def _stratum(entry: Mapping[str, Any], where: str) -> StratumClass:
    ids = entry.get("divisors")
    if not isinstance(ids, list) or not all(isinstance(i, str) for i in ids):
        raise InputError(f"{where}.divisors: expected a list of divisor ids")
    if len(set(ids)) != len(ids):
        raise InputError(f"{where}.divisors: repeated divisor id")
    if not any(key in entry for key in ("symbolic", "hodge", "euler")):
        raise InputError(f"{where}: a stratum needs at least one class")
    motivic = parse_laurent(entry["symbolic"], field=f"{where}.symbolic") if "symbolic" in entry else None
    hodge = parse_laurent(entry["hodge"], field=f"{where}.hodge") if "hodge" in entry else None
    euler = parse_rational(entry["euler"], field=f"{where}.euler") if "euler" in entry else None
    return StratumClass(divisors=frozenset(ids), motivic=motivic, hodge=hodge, euler=euler)


def parse_stratified(document: Mapping[str, Any], *, name: Optional[str] = None) -> StratifiedResolution:
    """
    Build a stratified resolution from a parsed document.

    Args:
        document: The JSON object
        name: Fallback name when the document has none

    Raises:
        InputError: on schema violations
        InconsistentLevels, MissingLevel: when declared classes do not fit together
    """
    dimension = document.get("dimension")
    if isinstance(dimension, bool) or not isinstance(dimension, int):
        raise InputError("dimension: expected an integer")
    complete = document.get("complete", False)
    if not isinstance(complete, bool):
        raise InputError("complete: expected a boolean")

    divisors = []
    for position, entry in enumerate(document.get("divisors", [])):
        where = f"divisors[{position}]"
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise InputError(f"{where}: expected an object with a string id")
        nu = parse_rational(entry.get("nu", ""), field=f"{where}.nu")
        if "N" in entry:
            N = parse_rational(entry["N"], field=f"{where}.N")
        elif "a" in entry:
            N = parse_rational(entry["a"], field=f"{where}.a") - nu
        else:
            raise InputError(f"{where}: needs N or a")
        divisors.append((entry["id"], nu, N))

    symbols: Dict[str, StratumSymbol] = {}
    for position, entry in enumerate(document.get("symbols", [])):
        if not isinstance(entry, dict):
            raise InputError(f"symbols[{position}]: expected an object")
        symbol = _symbol(entry, f"symbols[{position}]")
        if symbol.name in symbols:
            raise InputError(f"symbols[{position}]: symbol {symbol.name!r} declared twice")
        symbols[symbol.name] = symbol

    strata = []
    for position, entry in enumerate(document.get("strata", [])):
        if not isinstance(entry, dict):
            raise InputError(f"strata[{position}]: expected an object")
        strata.append(_stratum(entry, f"strata[{position}]"))

    title = document.get("name", name or "abstract")
    if not isinstance(title, str):
        raise InputError("name: expected a string")
    return create_stratified_resolution(
        title,
        dimension=dimension,
        complete=complete,
        divisors=divisors,
        strata=strata,
        symbols=symbols,
    )


def load_stratified(path: Union[str, Path]) -> StratifiedResolution:
    data = parse_stratified(read_document(path), name=Path(path).stem)
    logger.info("loaded stratified data %s from %s", data.name, path)
    return data


def stratified_to_document(data: StratifiedResolution) -> Dict[str, Any]:
    """The inverse of ``parse_stratified``; derived levels are written out."""
    symbols: List[Dict[str, Any]] = []
    for symbol in data.symbols.values():
        if symbol.genus is not None:
            symbols.append({"id": symbol.name, "genus": symbol.genus})
        else:
            symbols.append(
                {"id": symbol.name, "hodge": laurent_to_text(symbol.hodge), "euler": format_rational(symbol.euler)}
            )
    strata = []
    for stratum in data.strata:
        entry: Dict[str, Any] = {"divisors": list(data.ordered(stratum.divisors))}
        if stratum.motivic is not None:
            entry["symbolic"] = laurent_to_text(stratum.motivic)
        if stratum.hodge is not None:
            entry["hodge"] = laurent_to_text(stratum.hodge)
        if stratum.euler is not None:
            entry["euler"] = format_rational(stratum.euler)
        strata.append(entry)
    return {
        "name": data.name,
        "dimension": data.dimension,
        "complete": data.complete,
        "divisors": [
            {"id": divisor.id, "nu": format_rational(divisor.nu), "N": format_rational(divisor.N)}
            for divisor in data.divisors
        ],
        "symbols": symbols,
        "strata": strata,
    }


def dump_stratified(data: StratifiedResolution) -> str:
    return json.dumps(stratified_to_document(data), indent=2) + "\n"
