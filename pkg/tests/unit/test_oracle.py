import random
from fractions import Fraction

import pytest

from stringy_zeta.abstract import hyperplane_oracle, hyperplane_stratum_class, projective_class
from stringy_zeta.stringy import Level
from stringy_zeta.symbolic import LaurentExpr, RationalExpr

L = LaurentExpr.monomial(L=1)


def test_projective_classes():
    assert projective_class(2) == L**2 + L + 1
    assert projective_class(2, "euler") == 3
    assert projective_class(1, "hodge") == LaurentExpr.monomial(u=1, v=1) + 1
    assert projective_class(-1) == LaurentExpr()


def test_plane_cut_by_three_lines():
    assert hyperplane_stratum_class(2, 3, 0) == (L - 1) ** 2
    assert hyperplane_stratum_class(2, 3, 1) == L - 1
    assert hyperplane_stratum_class(2, 3, 2) == 1
    assert hyperplane_stratum_class(2, 3, 3) == LaurentExpr()
    assert hyperplane_stratum_class(2, 3, 0, Level.EULER) == 0
    with pytest.raises(ValueError):
        hyperplane_stratum_class(2, 3, 4)


def test_line_without_hyperplanes():
    result = hyperplane_oracle(2, 0, [], [])
    assert result.bruteforce == RationalExpr(L + 1)
    assert result.closedform == RationalExpr(L + 1)
    assert result.equal


@pytest.mark.parametrize(
    "r,m,k,dwt",
    [(1, 0, [], []), (2, 3, [1, 1, 1], [0, 0, 0]), (3, 2, [1], [0, 0])],
)
def test_oracle_arguments_are_checked(r, m, k, dwt):
    with pytest.raises(ValueError):
        hyperplane_oracle(r, m, k, dwt)


@pytest.mark.parametrize("r,m", [(r, m) for r in range(2, 6) for m in range(min(r, 4) + 1)])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_bruteforce_sum_equals_the_closed_form(r, m, seed):
    rng = random.Random(f"{r}-{m}-{seed}")
    k = [Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(m)]
    dwt = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)]
    assert hyperplane_oracle(r, m, k, dwt).equal
