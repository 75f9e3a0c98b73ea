import pytest
import anisobolev as ab


def pytest_generate_tests(metafunc):
    if "family" in metafunc.fixturenames:
        metafunc.parametrize("family", sorted(ab.FAMILIES), indirect=True)
    if "oracle_case" in metafunc.fixturenames:
        metafunc.parametrize(
            "oracle_case",
            [("cone", (2.0,)), ("cone", (0.0,)), ("tensor_bump", (0.0,)),
             ("radial_power", (1.0,)), ("plateau", (0.0,)), ("plateau", (3.0,))],
            indirect=True)


@pytest.fixture
def family(request):
    return ab.instantiate(ab.FamilySpec(request.param, n=2))


@pytest.fixture
def oracle_case(request):
    tag, A = request.param
    return ab.instantiate(ab.FamilySpec(tag, n=len(A))), ab.MonomialWeight(A)


@pytest.fixture
def lebesgue():
    return ab.MonomialWeight((0.0,))


@pytest.fixture
def quadratic():
    return ab.MonomialWeight((2.0,))


@pytest.fixture
def cone():
    return ab.Cone(n=1)


@pytest.fixture
def rtol(): return 1e-3
