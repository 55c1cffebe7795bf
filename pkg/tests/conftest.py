"""
Pytest configuration and shared fixtures for syzygy engine tests.
"""

import os

import pytest

from syzygy_python.algebra.fields import FieldSpec
from syzygy_python.algebra.groebner import Ideal
from syzygy_python.algebra.polynomial import Ring
from syzygy_python.config.settings import SyzygySettings
from syzygy_python.core.models import BettiTable, NumericInvariants


@pytest.fixture
def fp():
    """Fixture providing the default prime field."""
    return FieldSpec.prime()


@pytest.fixture
def qq():
    """Fixture providing the rationals."""
    return FieldSpec.rationals()


@pytest.fixture
def ring4(fp):
    """Fixture providing k[x0..x3] under grevlex."""
    return Ring(4, fp)


@pytest.fixture
def twisted_cubic(ring4):
    """Fixture providing the ideal of the twisted cubic S(3)."""
    return Ideal(ring4, [
        ring4.parse("x0*x2 - x1^2"),
        ring4.parse("x0*x3 - x1*x2"),
        ring4.parse("x1*x3 - x2^2"),
    ])


@pytest.fixture
def rational_quartic(ring4):
    """Fixture providing the ideal of the smooth rational quartic M(4,3,1,0)."""
    return Ideal(ring4, [
        ring4.parse("x0*x3 - x1*x2"),
        ring4.parse("x1^3 - x0^2*x2"),
        ring4.parse("x2^3 - x1*x3^2"),
        ring4.parse("x0*x2^2 - x1^2*x3"),
    ])


@pytest.fixture
def twisted_cubic_table():
    """Fixture providing the Betti table of the twisted cubic."""
    return BettiTable({(0, 0): 1, (1, 1): 3, (2, 1): 2})


@pytest.fixture
def rational_quartic_table():
    """Fixture providing the Betti table of the rational quartic."""
    return BettiTable({(0, 0): 1, (1, 1): 1, (1, 2): 3, (2, 2): 4, (3, 2): 1})


@pytest.fixture
def rnc4_table():
    """Fixture providing the Betti table of the rational normal curve in P^4."""
    return BettiTable({(0, 0): 1, (1, 1): 6, (2, 1): 8, (3, 1): 3})


@pytest.fixture
def sample_invariants():
    """Fixture providing the invariants of the twisted cubic."""
    return NumericInvariants(
        hilbert_numerator=[1, 0, -3, 2],
        h_vector=[1, 2],
        dimension=1,
        degree=3,
        codimension=2,
        regularity=1,
        projective_dimension=2,
        is_acm=True,
        max_p_with_N2p=None,
    )


@pytest.fixture
def fast_settings():
    """Fixture providing settings with the exactness certificate on one sample."""
    return SyzygySettings(exactness_samples=1)


@pytest.fixture
def temp_config_file(tmp_path):
    """Fixture providing a temporary JSON settings file."""
    config_file = tmp_path / "syzygy.json"
    config_file.write_text(
        '{"default_field": "qq", "default_seed": 7, "default_format": "kv", "timeout_seconds": 30}'
    )
    return str(config_file)


@pytest.fixture
def env_vars_syzygy():
    """Fixture that sets engine environment variables for testing."""
    os.environ.update({
        "SYZYGY_DEFAULT_FIELD": "fp:101",
        "SYZYGY_DEFAULT_SEED": "3",
        "SYZYGY_DEGREE_BOUND": "4",
        "SYZYGY_VERIFY_RESOLUTIONS": "false",
        "SYZYGY_PARALLEL_JOBS": "2",
    })
    yield


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )


@pytest.fixture(autouse=True)
def reset_environment():
    """Automatically reset environment variables after each test."""
    original_env = os.environ.copy()
    yield
    os.environ.clear()
    os.environ.update(original_env)


# Helper functions for tests
def assert_valid_table(table: BettiTable):
    """Assert that a table is the Betti table of some cyclic module S/I."""
    assert isinstance(table, BettiTable)
    assert table.get(0, 0) == 1
    assert all(j == 0 for i, j in table.entries if i == 0)
    assert all(v > 0 for v in table.entries.values())
