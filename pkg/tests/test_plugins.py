# The code in this module is mostly borrowed/adapted from PyScaffold and was originally
# published under the MIT license
# The original PyScaffold license can be found in 'NOTICE.txt'

from importlib.metadata import EntryPoint

import pytest

from lattice_crystals import plugins
from lattice_crystals.identities import Registry, load_builtin_registry
from lattice_crystals.plugins import ENTRYPOINT_GROUP, ErrorLoadingPlugin

EXISTING = ("builtin",)


def test_load_from_entry_point__error():
    # This module does not exist, so Python will have some trouble loading it
    # EntryPoint(name, value, group)
    entry = "mypkg.SOOOOO___fake___:activate"
    fake = EntryPoint("fake", entry, ENTRYPOINT_GROUP)
    with pytest.raises(ErrorLoadingPlugin):
        plugins.load_from_entry_point(fake)


def is_entry_point(ep):
    return all(hasattr(ep, attr) for attr in ("name", "load"))


def test_iterate_entry_points():
    plugin_iter = plugins.iterate_entry_points()
    assert hasattr(plugin_iter, "__iter__")
    pluging_list = list(plugin_iter)
    assert all([is_entry_point(e) for e in pluging_list])
    name_list = [e.name for e in pluging_list]
    for ext in EXISTING:
        assert ext in name_list


def test_list_from_entry_points():
    # Should return a list with all the plugins registered in the entrypoints
    pluging_list = plugins.list_from_entry_points()
    orig_len = len(pluging_list)
    plugin_names = " ".join(e.name for e in pluging_list)
    for example in EXISTING:
        assert example in plugin_names

    # a filtering function can be passed to avoid loading plugins that are not needed
    pluging_list = plugins.list_from_entry_points(
        filtering=lambda e: e.name != "builtin"
    )
    plugin_names = " ".join(e.name for e in pluging_list)
    assert len(pluging_list) == orig_len - 1
    assert "builtin" not in plugin_names


def test_builtin_identities():
    (builtin,) = plugins.list_from_entry_points(filtering=lambda e: e.name == "builtin")
    assert builtin.id == "lattice_crystals.identities.load_builtin_registry"
    registry = Registry.from_plugins([builtin])
    assert "touchard" in registry
    assert "motzkin-pos" in registry


class TestPluginWrapper:
    def test_empty_help_text(self):
        def _fn1():
            return []

        pw = plugins.PluginWrapper("name", _fn1)
        assert pw.help_text == ""

        def _fn2():
            """Help for `${name}`"""
            return []

        pw = plugins.PluginWrapper("name", _fn2)
        assert pw.help_text == "Help for `name`"

    def test_identities_are_loaded_lazily(self):
        calls = []

        def _fn():
            calls.append(1)
            return iter([])

        pw = plugins.PluginWrapper("lazy", _fn)
        assert calls == []
        assert pw.identities == []
        assert calls == [1]

    def test_entries_must_be_identities(self):
        def _fn():
            return [("touchard", None)]

        pw = plugins.PluginWrapper("bogus", _fn)
        with pytest.raises(ErrorLoadingPlugin, match="'bogus'.*not an identity"):
            pw.identities

    def test_repr(self):
        pw = plugins.PluginWrapper("builtin", load_builtin_registry)
        assert repr(pw).startswith("PluginWrapper('builtin'")
