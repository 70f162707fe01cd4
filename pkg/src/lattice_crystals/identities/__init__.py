"""
Named identities and conjecture scans over lattice-path numbers, Hankel
determinants and characters.

Every entry is an :class:`Identity`: a check comparing both sides of one instance
and a domain enumerating the instances up to a bound. Entries are collected from
the ``lattice_crystals.identities`` entry point group, so other distributions can
contribute their own (see :mod:`lattice_crystals.plugins`).
"""
from typing import List

from . import branching, catalan, hankels, scans
from .base import (
    PROFILES,
    Comparison,
    Identity,
    IdentityReport,
    Registry,
    Status,
    as_mapping,
    run_instance,
    verify,
    verify_many,
)
from .branching import branching_specializations
from .catalan import near_spin_nps, touchard_triangle
from .hankels import appendix_hankels, kappa, motzkin_hankel
from .qanalogs import (
    qmotzkin_prime,
    qmotzkin_tri_prime,
    qriordan_prime,
    qriordan_tri_prime,
    qt_catalan_prime,
    qt_catalan_tri_prime,
)
from .scans import conjecture_scan


def load_builtin_registry() -> List[Identity]:
    """Every identity and scan shipped with ``lattice-crystals``"""
    return [
        *catalan.IDENTITIES,
        *branching.IDENTITIES,
        *hankels.IDENTITIES,
        *scans.SCANS,
    ]


__all__ = [
    "Comparison",
    "Identity",
    "IdentityReport",
    "PROFILES",
    "Registry",
    "Status",
    "appendix_hankels",
    "as_mapping",
    "branching_specializations",
    "conjecture_scan",
    "kappa",
    "load_builtin_registry",
    "motzkin_hankel",
    "near_spin_nps",
    "qmotzkin_prime",
    "qmotzkin_tri_prime",
    "qriordan_prime",
    "qriordan_tri_prime",
    "qt_catalan_prime",
    "qt_catalan_tri_prime",
    "run_instance",
    "touchard_triangle",
    "verify",
    "verify_many",
]
