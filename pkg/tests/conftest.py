import pytest

from radcube.rings import build_from_quadrics


@pytest.fixture(scope="session")
def R1():
    """F5[x,y]/(x^2, y^2): Gorenstein, e=2, complete intersection."""
    return build_from_quadrics(5, ["x", "y"], ["x^2", "y^2"])


@pytest.fixture(scope="session")
def R4():
    """F5[x,y,z]/(x^2, x*y, y^2, z^2): not Gorenstein, e=3, r=2, Soc=m^2."""
    return build_from_quadrics(5, ["x", "y", "z"], ["x^2", "x*y", "y^2", "z^2"])


@pytest.fixture(scope="session")
def RS():
    """F5[x,y]/(x*y, y^2) truncated at degree 3: Soc != m^2, r=2."""
    return build_from_quadrics(5, ["x", "y"], ["x*y", "y^2"])


@pytest.fixture(scope="session")
def R2():
    """F5[x]/(x^3) written as the truncation with no quadric relations."""
    return build_from_quadrics(5, ["x"], [])
