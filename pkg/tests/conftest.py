import pytest
from hypothesis import HealthCheck, settings

from zeta_alpha.alpha import build_alpha_table
from zeta_alpha.oracle import OracleConfig

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def table_50():
    """Exact table through k=50, cross-recursion self-check enabled."""
    return build_alpha_table(50)


@pytest.fixture(scope="session")
def table_200():
    """Large exact table (positivity depth / cache payload); built once."""
    return build_alpha_table(200, self_check=False)


@pytest.fixture(scope="session")
def oracle_128():
    return OracleConfig(precision=128)
