import json
import logging

import pytest

from lattice_crystals import api, cli, plugins
from lattice_crystals.identities import Comparison, Identity
from lattice_crystals.identities.base import range_domain


def always_off(n):
    """An identity that never holds"""
    return Comparison(n, n + 1, False)


def broken_identities():
    """Identities that fail on purpose"""
    return [Identity("always-off", always_off, range_domain, (2, 3))]


@pytest.fixture
def broken_plugin(monkeypatch):
    plugin = plugins.PluginWrapper("broken", broken_identities)
    monkeypatch.setattr(cli, "list_plugins_from_entry_points", lambda: [plugin])
    return plugin


def run_json(capsys, *args):
    assert cli.main([*args, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


class TestHelp:
    def test_subcommands(self, capsys):
        with pytest.raises(SystemExit):
            cli.parse_args(["--help"], plugins=[])
        captured = capsys.readouterr()
        for command in cli.COMMANDS:
            assert command in captured.out

    def test_custom_plugins(self, capsys):
        fake_plugin = plugins.PluginWrapper("my42", broken_identities)
        with pytest.raises(SystemExit):
            cli.parse_args(["verify", "--help"], plugins=[fake_plugin])
        captured = capsys.readouterr()
        assert "my42" in captured.out
        assert "identities that fail on purpose" in captured.out

    def test_missing_weight(self):
        with pytest.raises(SystemExit):
            cli.parse_args(["char", "C", "2"], plugins=[])


class TestPluginSelection:
    PLUGINS = [
        plugins.PluginWrapper("builtin", broken_identities),
        plugins.PluginWrapper("broken", broken_identities),
    ]

    def test_enable(self):
        params = cli.parse_args(["verify", "-E", "broken"], self.PLUGINS)
        assert [p.name for p in params.plugins] == ["broken"]

    def test_disable(self):
        params = cli.parse_args(["verify", "-D", "broken"], self.PLUGINS)
        assert [p.name for p in params.plugins] == ["builtin"]

    def test_builtin_always_loaded(self):
        registry = cli.load_registry([self.PLUGINS[1]])
        assert "touchard" in registry
        assert "always-off" in registry


class TestChar:
    def test_dimension(self, capsys):
        assert cli.main(["char", "C", "2", "--fund", "0,2", "--mode", "dim"]) == 0
        assert capsys.readouterr().out == "14\n"

    @pytest.mark.parametrize("method", ["weyl", "crystal", "determinant"])
    def test_methods_agree(self, capsys, method):
        args = ["char", "C", "2", "--fund", "1,1", "--mode", "nps", "--oracle"]
        data = run_json(capsys, *args, "--method", method)
        assert data["method"] == method
        assert data["fundamental"] == ["1", "1"]
        assert sum(int(c) for _, c in data["value"]) == 16

    def test_partition(self, capsys):
        data = run_json(capsys, "char", "C", "3", "--partition", "1,1")
        assert data["fundamental"] == ["0", "1", "0"]
        assert data["value"] == "14"

    def test_character(self, capsys):
        args = ["char", "C", "2", "--fund", "1,0", "--mode", "character"]
        data = run_json(capsys, *args)
        assert data["value"] == [
            [[-2, 0], "1"],
            [[0, -2], "1"],
            [[0, 2], "1"],
            [[2, 0], "1"],
        ]

    def test_csv(self, capsys):
        args = ["char", "A", "1", "--fund", "2", "--mode", "nps", "--format", "csv"]
        assert cli.main(args) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["exponent,coefficient", "0,1", "1,1", "2,1"]

    def test_oracle_mismatch(self, monkeypatch, caplog):
        monkeypatch.setattr(cli, "dim_weyl", lambda weight: 0)
        with pytest.raises(SystemExit) as info:
            cli.main(["char", "C", "2", "--fund", "0,2", "--oracle"])
        assert info.value.code == 4
        assert "crystal oracle counts 14" in caplog.text

    def test_invalid_weight(self, caplog):
        with pytest.raises(SystemExit) as info:
            cli.main(["char", "C", "2", "--partition", "1,1,1"])
        assert info.value.code == 2


class TestMult:
    def test_spin_rectangle(self, capsys):
        assert cli.main(["mult", "B", "1", "--spin-rect", "1"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_wedge_power_with_oracle(self, capsys):
        data = run_json(capsys, "mult", "C", "2", "--wedge-power", "1", "--oracle")
        assert data["method"] == "hankel"
        assert data["value"] == data["oracle"] == "3"
        assert data["target"] == ["0", "0"]

    def test_target(self, capsys):
        args = ["mult", "C", "2", "--wedge-power", "1", "--target", "1", "--oracle"]
        data = run_json(capsys, *args)
        assert data["method"] == "determinant"
        assert data["value"] == "2"

    def test_spin_power(self, capsys):
        data = run_json(capsys, "mult", "B", "2", "--spin-power", "2", "--oracle")
        assert data["value"] == "1"

    @pytest.mark.parametrize(
        "args",
        [
            ["mult", "B", "2", "--spin-power", "3"],
            ["mult", "C", "2", "--spin-power", "2"],
            ["mult", "C", "2", "--wedge-power", "1", "--target", "1,0,0"],
            ["mult", "B", "2", "--spin-rect", "1", "--target", "1"],
        ],
    )
    def test_invalid(self, args):
        with pytest.raises(SystemExit) as info:
            cli.main(args)
        assert info.value.code == 2


class TestPaths:
    def test_dyck(self, capsys):
        assert cli.main(["paths", "dyck", "3", "3"]) == 0
        words = capsys.readouterr().out.split()
        assert len(words) == 5
        assert "ENENEN" in words

    def test_motzkin_triangle(self, capsys):
        data = run_json(capsys, "paths", "motzkin", "5", "--triangle", "3")
        assert data["count"] == "14"
        assert data["parameters"] == {"n": "5", "k": "3"}

    def test_statistics(self, capsys):
        data = run_json(capsys, "paths", "dyck", "2", "--stats")
        assert data["count"] == "2"
        assert all("signed_weight" in w["statistics"] for w in data["words"])

    def test_bijection(self, capsys):
        args = ["paths", "dyck", "5", "5", "--bijection", "xi", "--word", "EENENNEENN"]
        data = run_json(capsys, *args)
        assert data == {"bijection": "xi", "word": "EENENNEENN", "column": "-1,-2,3,-4"}

    def test_bijection_listing(self, capsys):
        data = run_json(capsys, "paths", "dyck", "1", "4", "--bijection", "xi-prime")
        assert len(data) == 4
        assert all(entry["bijection"] == "xi-prime" for entry in data)

    def test_word_with_wrong_letters(self):
        args = ["paths", "dyck", "2", "2", "--bijection", "xi", "--word", "EEN"]
        with pytest.raises(SystemExit) as info:
            cli.main(args)
        assert info.value.code == 2

    def test_cap(self, caplog):
        with pytest.raises(SystemExit) as info:
            cli.main(["paths", "dyck", "6", "6", "--cap", "3"])
        assert info.value.code == 3
        assert "resource cap of 3" in caplog.text

    def test_output_file(self, tmp_path):
        output = tmp_path / "words.txt"
        assert cli.main(["paths", "rectangle", "2", "2", "-o", str(output)]) == 0
        assert len(output.read_text(encoding="utf-8").split()) == 6


class TestVerify:
    def test_touchard(self, capsys):
        assert cli.main(["verify", "touchard", "--n", "12"]) == 0
        assert "touchard: verified up to 12" in capsys.readouterr().out

    def test_json_reports(self, capsys):
        reports = run_json(capsys, "verify", "spin-b", "touchard", "--n", "3")
        assert [r["name"] for r in reports] == ["spin-b", "touchard"]
        assert all(r["status"] == "verified" for r in reports)
        validator = api.Validator("identity_report")
        for report in reports:
            validator(report)

    def test_unknown(self, caplog):
        with pytest.raises(SystemExit) as info:
            cli.main(["verify", "touchard-prime"])
        assert info.value.code == 2
        assert "touchard-prime" in caplog.text

    def test_list(self, capsys):
        assert cli.main(["verify", "--list"]) == 0
        out = capsys.readouterr().out
        assert "touchard: " in out
        assert "motzkin-pos" not in out

    def test_failure_exit_code(self, capsys, broken_plugin, caplog):
        caplog.set_level(logging.WARNING)
        assert cli.main(["verify", "always-off", "--format", "json"]) == 1
        (report,) = json.loads(capsys.readouterr().out)
        assert report["status"] == "failed"
        assert report["counterexample"]["parameters"] == {"n": "0"}
        assert "Failed: always-off" in caplog.text


class TestScan:
    def test_scan(self, capsys):
        assert cli.main(["scan", "motzkin-pos", "--n", "6"]) == 0
        assert "motzkin-pos: verified up to 6" in capsys.readouterr().out

    def test_list(self, capsys):
        assert cli.main(["scan", "--list"]) == 0
        out = capsys.readouterr().out
        assert "factored-motzkin-2shifted-f" in out
        assert "touchard" not in out

    def test_counterexamples_do_not_change_the_exit_code(self, broken_plugin):
        # a failed identity selected by name is still reported as a scan result
        assert cli.main(["scan", "always-off"]) == 0
