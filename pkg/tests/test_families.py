import pytest

from domrel.errors import ParameterError
from domrel.families import FamilySpec, drel_family
from domrel.oracle import oracle_domination_number, oracle_drel_poly
from domrel.poly import Polynomial


def test_paper_values():
    assert drel_family("P:2") == Polynomial([0, 2, -1])
    assert drel_family("C:3") == Polynomial([0, 3, -3, 1])
    assert drel_family("C:4") == Polynomial([0, 0, 6, -8, 3])


def test_k22_matches_oracle():
    spec = FamilySpec.parse("Kst:2,2")
    assert drel_family(spec) == oracle_drel_poly(spec.graph())
    # K_{2,2} is the 4-cycle
    assert drel_family(spec) == Polynomial([0, 0, 6, -8, 3])


@pytest.mark.parametrize("family", ["L", "K", "P", "C"])
def test_matches_oracle_up_to_15(family):
    for n in range(3 if family == "C" else 1, 16):
        spec = FamilySpec(family, n)
        assert drel_family(spec) == oracle_drel_poly(spec.graph()), str(spec)


def test_kst_matches_oracle():
    for s in range(1, 14):
        for t in range(1, 16 - s):
            spec = FamilySpec("Kst", s=s, t=t)
            assert drel_family(spec) == oracle_drel_poly(spec.graph()), str(spec)


@pytest.mark.parametrize("family", ["P", "C"])
def test_lowest_power_is_domination_number(family):
    for n in range(3, 16):
        spec = FamilySpec(family, n)
        poly = drel_family(spec)
        assert poly.lowest_degree() == -(-n // 3)
        assert poly.lowest_degree() == oracle_domination_number(spec.graph())


def test_value_at_one():
    for text in ["L:4", "K:6", "Kst:3,4", "P:11", "C:9"]:
        assert drel_family(text).eval(1) == 1


@pytest.mark.parametrize("text", ["C:2", "Kst:0,3", "P:0", "Q:3", "Kst:3", "P:3,4"])
def test_bad_specs(text):
    with pytest.raises(ParameterError):
        drel_family(text)
