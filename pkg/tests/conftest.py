from fractions import Fraction

import pytest

from octaboson.qkernels import ParamSet, default_params


@pytest.fixture(scope="session")
def params4() -> ParamSet:
    return default_params("four")


@pytest.fixture(scope="session")
def params3() -> ParamSet:
    return default_params("three")


@pytest.fixture(scope="session")
def params2() -> ParamSet:
    return default_params("two")


@pytest.fixture(scope="session")
def param_triple(params4) -> tuple[ParamSet, ParamSet, ParamSet]:
    """Three distinct generic rational parameter points (identity-in-parameters
    claims are certified by multi-point sampling)."""
    second = ParamSet(
        q=Fraction(1, 3),
        ts=(Fraction(1, 2), Fraction(1, 5), Fraction(-2, 7), Fraction(3, 8)),
    )
    third = ParamSet(
        q=Fraction(2, 5),
        ts=(Fraction(-1, 2), Fraction(2, 3), Fraction(1, 7), Fraction(-1, 9)),
    )
    return (params4, second, third)
