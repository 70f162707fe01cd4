"""
Identity plugins are callables registered under the ``lattice_crystals.identities``
`entry point`_ group. Each one takes no arguments and returns an iterable of
:class:`~lattice_crystals.identities.Identity` entries, for example::

    [options.entry_points]
    lattice_crystals.identities =
        mine = my_package.identities:load

.. _entry point: https://setuptools.readthedocs.io/en/latest/userguide/entry_point.html
"""

import logging
from importlib.metadata import EntryPoint, entry_points
from string import Template
from typing import Any, Callable, Iterable, List, cast

from ..errors import ErrorLoadingPlugin
from ..identities.base import Identity
from ..types import IdentityLoader

_logger = logging.getLogger(__name__)

ENTRYPOINT_GROUP = "lattice_crystals.identities"


class PluginWrapper:
    """Named identity loader.

    The loader only runs when :attr:`identities` is accessed, so the CLI can list
    plugins (and their help text) without building every registry entry.
    """

    def __init__(self, name: str, load_fn: IdentityLoader):
        self._name = name
        self._load_fn = load_fn

    @property
    def id(self):
        return f"{self._load_fn.__module__}.{self._load_fn.__name__}"

    @property
    def name(self):
        return self._name

    @property
    def identities(self) -> List[Identity]:
        entries = list(self._load_fn())
        for entry in entries:
            if not isinstance(entry, Identity):
                reason = f"{entry!r} is not an identity"
                raise ErrorLoadingPlugin(self.name, reason)
        _logger.debug(f"Plugin {self.id} contributes {len(entries)} identities")
        return entries

    @property
    def help_text(self) -> str:
        tpl = self._load_fn.__doc__
        if not tpl:
            return ""
        return Template(tpl).safe_substitute(name=self.name, id=self.id)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r}, {self.id})"


def iterate_entry_points(group=ENTRYPOINT_GROUP) -> Iterable[EntryPoint]:
    """Entry points registered under ``group``, sorted by name.

    When two distributions register the same name, the last one wins.
    Use it with :obj:`load_from_entry_point` to filter plugins before loading them.
    """
    entries = entry_points()
    if hasattr(entries, "select"):  # pragma: no cover
        select = cast(Any, getattr(entries, "select"))  # typecheck gymnastics # noqa
        entries_: Iterable[EntryPoint] = select(group=group)
    else:  # pragma: no cover
        # TODO: drop the dict interface once Python 3.10 is the oldest supported
        entries_ = (plugin for plugin in entries.get(group, []))
    deduplicated = {e.name: e for e in sorted(entries_, key=lambda e: e.name)}
    return list(deduplicated.values())


def load_from_entry_point(entry_point: EntryPoint) -> PluginWrapper:
    try:
        fn = entry_point.load()
    except Exception as ex:
        plugin = getattr(entry_point, "module", entry_point.name)
        raise ErrorLoadingPlugin(plugin) from ex
    if not callable(fn):
        raise ErrorLoadingPlugin(entry_point.name, "the entry point is not callable")
    return PluginWrapper(entry_point.name, fn)


def list_from_entry_points(
    group: str = ENTRYPOINT_GROUP,
    filtering: Callable[[EntryPoint], bool] = lambda _: True,
) -> List[PluginWrapper]:
    """Load every identity plugin registered via entry points.

    Args:
        group: entry point group where the plugins are registered
        filtering: decides whether an entry point should be loaded and included in
            the result (``True`` means it is included)
    """
    return [
        load_from_entry_point(e) for e in iterate_entry_points(group) if filtering(e)
    ]


__all__ = [
    "ENTRYPOINT_GROUP",
    "ErrorLoadingPlugin",
    "PluginWrapper",
    "iterate_entry_points",
    "list_from_entry_points",
    "load_from_entry_point",
]
