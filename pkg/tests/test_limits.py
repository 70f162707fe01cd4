import logging

import pytest

from lattice_crystals import limits
from lattice_crystals.errors import ResourceCapExceeded


def write_config(path, text):
    path.write_text(text, encoding="utf-8")
    return path


class TestLoadConfig:
    def test_defaults(self, tmp_path):
        assert limits.load_config(tmp_path / "missing.toml") == limits.Limits()

    def test_file(self, tmp_path):
        config = write_config(
            tmp_path / "lattice-crystals.toml",
            '[lattice-crystals]\ncap = 500\nseed = 3\nprofile = "full"\n',
        )
        assert limits.load_config(config) == limits.Limits(500, 3, "full")

    def test_environment_wins(self, tmp_path, monkeypatch):
        config = write_config(tmp_path / "conf.toml", "[lattice-crystals]\ncap = 500\n")
        monkeypatch.setenv(limits.CONFIG_ENV_VAR, str(config))
        monkeypatch.setenv(limits.CAP_ENV_VAR, "77")
        assert limits.load_config() == limits.Limits(cap=77)

    def test_unknown_keys(self, tmp_path, caplog):
        config = write_config(tmp_path / "conf.toml", "[lattice-crystals]\ncaps = 1\n")
        with caplog.at_level(logging.WARNING):
            assert limits.load_config(config) == limits.Limits()
        assert "caps" in caplog.text


class TestOverride:
    def test_nested(self):
        with limits.override(cap=10) as outer:
            assert outer.cap == 10
            with limits.override(seed=5, cap=None) as inner:
                assert inner == limits.Limits(cap=10, seed=5)
            assert limits.active() == outer
        assert limits.active() == limits.Limits()

    def test_small_cap_fixture(self, small_cap):
        assert limits.active().cap == 50

    def test_check(self):
        assert limits.check(3, "things") == 3
        with limits.override(cap=2):
            with pytest.raises(ResourceCapExceeded) as exc:
                limits.check(3, "things")
        assert (exc.value.what, exc.value.count, exc.value.cap) == ("things", 3, 2)
        assert "LATTICE_CRYSTALS_CAP" in str(exc.value)
