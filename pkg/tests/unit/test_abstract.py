from fractions import Fraction

import pytest

from stringy_zeta.abstract import StratumClass, closed_strata_form, create_stratified_resolution, zeta_abstract
from stringy_zeta.errors import DefinabilityViolation, InconsistentLevels, InputError, MissingLevel
from stringy_zeta.stringy import Level, eval_or_limit_at_1
from stringy_zeta.symbolic import S, LaurentExpr, RationalExpr, StratumSymbol, UniRationalFn

L = LaurentExpr.monomial(L=1)
C = LaurentExpr.monomial(symbols={"C": 1})
UV = LaurentExpr.monomial(u=1, v=1)


def _uv(coefficient, p, q):
    return LaurentExpr.monomial(coefficient, u=p, v=q)


def has_alternating_signs(polynomial):
    """Every monomial u^p v^q has a coefficient of sign (-1)^(p+q)."""
    for key, coefficient in polynomial.items():
        _, _, p, q = polynomial.exponents(key)
        if (coefficient > 0) != ((p + q) % 2 == 0):
            return False
    return True


def test_plane_quartic_euler_zeta(load_fixture):
    data = load_fixture("example-3-6")
    z = zeta_abstract(data, "euler")
    assert z.value == UniRationalFn.from_expr(13 / S)
    assert eval_or_limit_at_1(z) == 13


def test_plane_quartic_motivic_value_at_s1(load_fixture):
    data = load_fixture("example-3-6")
    value = eval_or_limit_at_1(zeta_abstract(data, "motivic"))
    assert value == RationalExpr(-(L**3 + L**2 + L + 4 * L * C))
    assert value.is_laurent()


def test_plane_quartic_hodge_value_at_s1(load_fixture):
    data = load_fixture("example-3-6")
    value = eval_or_limit_at_1(zeta_abstract(data, "hodge"))
    expected = UV**3 + 5 * UV**2 - _uv(12, 2, 1) - _uv(12, 1, 2) + 5 * UV
    assert value == RationalExpr(-expected)
    assert value.is_laurent()
    assert has_alternating_signs(expected)


def test_plane_quartic_levels_are_derived(load_fixture):
    data = load_fixture("example-3-6")
    stratum = data.stratum(["E1"])
    assert stratum.hodge == UV * (UV - _uv(3, 1, 0) - _uv(3, 0, 1) + 1)
    assert stratum.euler == -4
    assert data.levels() == (Level.MOTIVIC, Level.HODGE, Level.EULER)


@pytest.mark.parametrize("level", list(Level))
def test_closed_strata_form_agrees(load_fixture, level):
    data = load_fixture("example-3-6")
    assert closed_strata_form(data, level) == zeta_abstract(data, level).value


def _single_divisor(nu, N, **classes):
    return create_stratified_resolution(
        "single",
        dimension=2,
        complete=False,
        divisors=[("E", nu, N)],
        strata=[
            StratumClass(divisors=frozenset(), euler=Fraction(0)),
            StratumClass(divisors=frozenset({"E"}), **classes),
        ],
    )


def test_missing_level_is_reported():
    data = _single_divisor(1, 1, euler=Fraction(2))
    assert zeta_abstract(data, "euler").value == UniRationalFn.reciprocal_linear(1, 1) * 2
    with pytest.raises(MissingLevel):
        zeta_abstract(data, "hodge")


def test_undefined_factor_is_rejected():
    data = _single_divisor(0, 0, euler=Fraction(2))
    with pytest.raises(DefinabilityViolation):
        zeta_abstract(data, "euler")
    data = _single_divisor(-1, 2, euler=Fraction(2))
    with pytest.raises(DefinabilityViolation):
        zeta_abstract(data, "euler")


def test_declared_levels_must_agree():
    with pytest.raises(InconsistentLevels):
        _single_divisor(1, 0, motivic=L + 1, euler=Fraction(3))
    with pytest.raises(InconsistentLevels):
        _single_divisor(1, 0, motivic=L + 1, hodge=UV)


def test_undeclared_symbols_are_missing():
    with pytest.raises(MissingLevel):
        _single_divisor(1, 0, motivic=C)


def test_derivation_uses_the_declared_symbols():
    data = create_stratified_resolution(
        "curve",
        dimension=2,
        complete=False,
        divisors=[("E", 1, 0)],
        strata=[
            StratumClass(divisors=frozenset(), motivic=LaurentExpr()),
            StratumClass(divisors=frozenset({"E"}), motivic=C),
        ],
        symbols={"C": StratumSymbol.curve("C", 2)},
    )
    assert data.stratum(["E"]).euler == -2


@pytest.mark.parametrize(
    "divisors,strata,dimension",
    [
        ([("E", 1, 0)], [StratumClass(divisors=frozenset({"E"}), euler=Fraction(1))], 2),
        ([("E", 1, 0), ("E", 1, 0)], [StratumClass(divisors=frozenset(), euler=Fraction(1))], 2),
        ([("E", 1, 0)], [StratumClass(divisors=frozenset({"X"}), euler=Fraction(1))], 2),
        ([("E", 1, 0)], [StratumClass(divisors=frozenset(), euler=Fraction(1))], 0),
    ],
)
def test_malformed_datasets(divisors, strata, dimension):
    with pytest.raises(InputError):
        create_stratified_resolution("bad", dimension=dimension, complete=False, divisors=divisors, strata=strata)


def test_motivic_classes_may_not_use_t():
    with pytest.raises(InputError):
        _single_divisor(1, 0, motivic=LaurentExpr.monomial(T=1))
