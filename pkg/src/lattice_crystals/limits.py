"""
Resource limits and defaults shared by every enumeration in the package.

Values are resolved from (in increasing priority): built-in defaults, a TOML
configuration file, the ``LATTICE_CRYSTALS_CAP`` environment variable and
explicit overrides (e.g. CLI flags).
"""
import logging
import os
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Mapping, NamedTuple, Optional

from .errors import ResourceCapExceeded

if sys.version_info[:2] >= (3, 11):  # pragma: no cover
    from tomllib import loads
else:  # pragma: no cover
    from tomli import loads

_logger = logging.getLogger(__name__)

DEFAULT_CAP = 10**7
CAP_ENV_VAR = "LATTICE_CRYSTALS_CAP"
CONFIG_ENV_VAR = "LATTICE_CRYSTALS_CONFIG"
CONFIG_FILE = "lattice-crystals.toml"
CONFIG_TABLE = "lattice-crystals"


class Limits(NamedTuple):
    cap: int = DEFAULT_CAP
    seed: int = 0
    profile: str = "small"


def from_mapping(table: Mapping, base: Limits = Limits()) -> Limits:
    known = {k: table[k] for k in Limits._fields if k in table}
    unknown = set(table) - set(known)
    if unknown:
        _logger.warning(f"Ignoring unknown configuration keys: {sorted(unknown)}")
    return base._replace(**known)


def load_config(path: Optional[Path] = None) -> Limits:
    """Resolve the limits from the configuration file and the environment."""
    limits = Limits()
    if path is None:
        env_path = os.getenv(CONFIG_ENV_VAR)
        path = Path(env_path) if env_path else Path(CONFIG_FILE)
    if path.is_file():
        _logger.debug(f"Reading configuration from {path}")
        doc = loads(path.read_text(encoding="utf-8"))
        limits = from_mapping(doc.get(CONFIG_TABLE, {}), limits)

    env_cap = os.getenv(CAP_ENV_VAR)
    if env_cap:
        limits = limits._replace(cap=int(env_cap))
    return limits


_active: Optional[Limits] = None


def active() -> Limits:
    global _active
    if _active is None:
        _active = load_config()
    return _active


@contextmanager
def override(**changes) -> Iterator[Limits]:
    """Temporarily replace some of the active limits, e.g. ``override(cap=100)``"""
    global _active
    previous = active()
    _active = previous._replace(**{k: v for k, v in changes.items() if v is not None})
    try:
        yield _active
    finally:
        _active = previous


def check(count: int, what: str) -> int:
    """Raise :exc:`ResourceCapExceeded` if ``count`` is over the active cap."""
    cap = active().cap
    if count > cap:
        raise ResourceCapExceeded(what, count, cap)
    _logger.debug(f"Enumerating {count} objects for {what}")
    return count
