"""
Shared pytest fixtures and configuration for omnileib tests.
"""

import pytest
import tempfile
from pathlib import Path
import sys

# Add the project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

FIXTURES_DIR = project_root / "tests" / "fixtures"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def setup_test_env(monkeypatch, tmp_path):
    """Disable dotenv and point user and project config at a scratch directory."""
    from omnileib.config import Config, ConfigLoader

    monkeypatch.setenv("OMNILEIB_DISABLE_DOTENV", "1")
    for var in ("OMNILEIB_MAX_DEGREE", "OMNILEIB_WORKERS", "OMNILEIB_DEFAULT_ALGEBRAS_DIR",
                "OMNILEIB_DEFAULT_CONFIG_FILE"):
        monkeypatch.delenv(var, raising=False)

    user_dir = tmp_path / "user-config"
    monkeypatch.setattr(Config, "_USER_CONFIG_DIR", user_dir)
    monkeypatch.setattr(ConfigLoader, "_USER_CONFIG_PATH", user_dir / "config.yaml")

    project_dir = tmp_path / "project"
    project_dir.mkdir()
    monkeypatch.chdir(project_dir)
    yield


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def fixture_path():
    """Absolute path of a file under tests/fixtures."""
    def _path(name: str) -> str:
        return str(FIXTURES_DIR / name)
    return _path


@pytest.fixture
def l2():
    from omnileib.catalog import get_algebra
    return get_algebra("L2")


@pytest.fixture
def sl2():
    from omnileib.catalog import get_algebra
    return get_algebra("sl2")


@pytest.fixture
def abelian2():
    from omnileib.catalog import get_algebra
    return get_algebra("abelian2")


@pytest.fixture
def non_leibniz():
    """[e1, e1] = e2, [e2, e1] = e1; the identity fails at (e1, e1, e1)."""
    from omnileib.algebra import LeibnizAlgebra
    return LeibnizAlgebra.from_entries(2, [(1, 1, 2, 1), (2, 1, 1, 1)], name="nonleibniz2")


@pytest.fixture
def project_algebras_dir():
    """The project catalog directory under the current (scratch) working directory."""
    directory = Path.cwd() / ".omnileib" / "algebras"
    directory.mkdir(parents=True)
    return directory


@pytest.fixture
def broken_right(l2):
    """l = 0 on Q with r_{e2} = 1 over L2; r_y r_x = 0 fails at (e2, e2)."""
    from fractions import Fraction
    from omnileib.linalg import zeros
    from omnileib.representations import Representation
    right = zeros((2, 1, 1))
    right[1, 0, 0] = Fraction(1)
    return Representation(l2, 1, zeros((2, 1, 1)), right, "broken")
