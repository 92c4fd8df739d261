"""
Unit tests for the config module.
"""

import pytest
import yaml
from pathlib import Path

from omnileib.config import Config, ConfigLoader


class TestConfig:
    """Unit tests for the static configuration namespace."""

    @pytest.mark.unit
    def test_config_is_not_instantiable(self):
        """Test that Config class cannot be instantiated."""
        with pytest.raises(TypeError, match="cannot be instantiated"):
            Config()

    @pytest.mark.unit
    def test_config_is_not_mutable(self):
        """Test that Config instances refuse attribute assignment."""
        config_instance = object.__new__(Config)
        with pytest.raises(AttributeError, match="read-only"):
            config_instance.__setattr__("test", "value")

    @pytest.mark.unit
    def test_paths_are_path_objects(self):
        assert isinstance(Config.PACKAGE_DIR, Path)
        assert isinstance(Config.get_algebras_dir(), Path)
        assert isinstance(Config.get_config_file(), Path)
        assert isinstance(Config.get_log_file_path(), Path)

    @pytest.mark.unit
    def test_defaults(self):
        assert Config.get_default_max_degree() == 3
        assert Config.get_default_workers() == 1
        assert Config.get_default_seed() == 0

    @pytest.mark.unit
    @pytest.mark.parametrize("value,expected", [("4", 4), ("99", 6), ("-2", 0), ("many", 3)])
    def test_max_degree_from_env(self, monkeypatch, value, expected):
        monkeypatch.setenv("OMNILEIB_MAX_DEGREE", value)
        assert Config.get_default_max_degree() == expected

    @pytest.mark.unit
    def test_workers_from_env(self, monkeypatch):
        monkeypatch.setenv("OMNILEIB_WORKERS", "0")
        assert Config.get_default_workers() == 1
        monkeypatch.setenv("OMNILEIB_WORKERS", "3")
        assert Config.get_default_workers() == 3

    @pytest.mark.unit
    def test_algebras_dir_from_env(self, monkeypatch, temp_dir):
        monkeypatch.setenv("OMNILEIB_DEFAULT_ALGEBRAS_DIR", str(temp_dir))
        assert Config.get_algebras_dir() == temp_dir
        assert Config.get_algebras_dirs() == [temp_dir]

    @pytest.mark.unit
    def test_user_algebras_dir(self, tmp_path):
        user_algebras = tmp_path / "user-config" / "algebras"
        user_algebras.mkdir(parents=True)
        assert Config.get_algebras_dirs() == [user_algebras, Config.get_algebras_dir()]

    @pytest.mark.unit
    def test_dotenv_disabled_in_tests(self):
        assert Config.dotenv_disabled()


class TestConfigLoader:
    """Layered YAML settings."""

    @pytest.mark.unit
    def test_package_defaults(self):
        loader = ConfigLoader()
        assert loader.get("max_degree") == 3
        assert loader.get("validate") is True
        assert not loader.has_user_config
        assert not loader.has_project_config

    @pytest.mark.unit
    def test_project_overrides_user(self):
        loader = ConfigLoader()
        loader.save_user_config({"max_degree": 2, "seed": 11})
        loader.save_project_config({"max_degree": 1})
        assert loader.has_user_config and loader.has_project_config
        assert loader.get("max_degree") == 1
        assert loader.get("seed") == 11
        assert loader.get("trials") == 200

    @pytest.mark.unit
    def test_project_file_location(self):
        loader = ConfigLoader()
        loader.save_project_config({"workers": 2})
        assert loader.project_config_path == Path.cwd() / ".omnileib" / "config.yaml"
        with open(loader.project_config_path, encoding="utf-8") as f:
            assert yaml.safe_load(f) == {"workers": 2}
        assert ConfigLoader().get_workers() == 2

    @pytest.mark.unit
    def test_explicit_project_dir(self, temp_dir):
        (temp_dir / ".omnileib").mkdir()
        (temp_dir / ".omnileib" / "config.yaml").write_text("seed: 5\n", encoding="utf-8")
        assert ConfigLoader(temp_dir).get("seed") == 5
        assert ConfigLoader().get("seed") == 0

    @pytest.mark.unit
    def test_max_degree_is_clamped(self):
        loader = ConfigLoader()
        loader.save_project_config({"max_degree": 40})
        assert loader.get_max_degree() == 6

    @pytest.mark.unit
    def test_unreadable_yaml_is_ignored(self):
        path = Path.cwd() / ".omnileib" / "config.yaml"
        path.parent.mkdir(parents=True)
        path.write_text("max_degree: [unclosed\n", encoding="utf-8")
        assert ConfigLoader().get("max_degree") == 3

    @pytest.mark.unit
    def test_resolve_with_overrides(self):
        loader = ConfigLoader()
        loader.save_project_config({"max_degree": 2, "unrelated": "x"})
        settings = loader.resolve_with_overrides(seed=9, validate=False)
        assert settings == {"max_degree": 2, "seed": 9, "trials": 200, "workers": 1, "validate": False}

    @pytest.mark.unit
    def test_defaults_without_package_file(self, monkeypatch, temp_dir):
        monkeypatch.setenv("OMNILEIB_DEFAULT_CONFIG_FILE", str(temp_dir / "none.yaml"))
        settings = ConfigLoader().resolve_with_overrides()
        assert settings["max_degree"] == Config.get_default_max_degree()
        assert settings["validate"] is True
