"""
Hankel determinants of Carlitz-Riordan ``q``-Catalan numbers and of Cigler's
``q``-Motzkin numbers.

>>> str(motzkin_hankel(0, 2))
'q'
"""
import logging
from functools import partial

from ..exactpoly import LaurentPoly, Q
from ..lgvdet import LAURENT, det_division_free, hankel
from ..paths import carlitz_riordan, cigler_motzkin, tunnel_generating
from .base import Comparison, Identity, IdentityReport, range_domain, run_instance

_logger = logging.getLogger(__name__)

_KAPPA = (1, 1, 0, -1, -1, 0)


def carlitz_riordan_hankel(shift: int, size: int) -> LaurentPoly:
    """``det[CatCR_(shift+i+j)]_(i,j=0)^(size-1)``"""
    return det_division_free(hankel(carlitz_riordan, size, shift), LAURENT)


def motzkin_hankel(shift: int, size: int) -> LaurentPoly:
    """``det[Mot^dagger_(shift+i+j)]_(i,j=0)^(size-1)``"""
    return det_division_free(hankel(cigler_motzkin, size, shift), LAURENT)


def kappa(n: int) -> int:
    """Sign pattern of the shifted Motzkin Hankel determinants, period 6"""
    return _KAPPA[n % 6]


def carlitz_riordan_det(n: int) -> Comparison:
    """det[CatCR_(i+j)]_(i,j=0)^n = q^(n(n+1)(4n-1)/6)"""
    exponent = n * (n + 1) * (4 * n - 1) // 6
    return Comparison.equal(carlitz_riordan_hankel(0, n + 1), Q**exponent)


def carlitz_riordan_shifted_det(n: int) -> Comparison:
    """det[CatCR_(1+i+j)]_(i,j=0)^n = q^(n(n+1)(4n+5)/6)"""
    exponent = n * (n + 1) * (4 * n + 5) // 6
    return Comparison.equal(carlitz_riordan_hankel(1, n + 1), Q**exponent)


def cigler_det(n: int) -> Comparison:
    """det[Mot^dagger_(i+j)]_(i,j=0)^(n-1) = q^(n(n-1)(2n-1)/6)"""
    exponent = n * (n - 1) * (2 * n - 1) // 6
    return Comparison.equal(motzkin_hankel(0, n), Q**exponent)


def cigler_shifted_det(n: int) -> Comparison:
    """det[Mot^dagger_(1+i+j)]_(i,j=0)^(n-1) = kappa_n q^(n(n^2-1)/3)"""
    exponent = n * (n * n - 1) // 3
    return Comparison.equal(motzkin_hankel(1, n), kappa(n) * Q**exponent)


def tunnel_statistic(n: int) -> Comparison:
    """Mot^dagger_n(q) is the generating function of the tunnel length"""
    return Comparison.equal(cigler_motzkin(n), tunnel_generating(n))


HANKEL_KINDS = {
    "catalan-cr": "hankel-carlitz-riordan",
    "catalan-cr-shifted": "hankel-carlitz-riordan-shifted",
    "cigler": "hankel-cigler",
    "cigler-shifted": "hankel-cigler-shifted",
    "tunnel": "tunnel-statistic",
}


def appendix_hankels(which: str, n: int) -> IdentityReport:
    """Check one closed form (``catalan-cr``, ``catalan-cr-shifted``, ``cigler``,
    ``cigler-shifted`` or ``tunnel``) for one ``n``"""
    key = which.replace("_", "-")
    if key not in HANKEL_KINDS:
        raise ValueError(f"expected one of {sorted(HANKEL_KINDS)}, got {which!r}")
    if n < (1 if key.startswith("cigler") else 0):
        raise ValueError(f"{which} is not defined for n={n}")
    return run_instance(IDENTITIES_BY_NAME[HANKEL_KINDS[key]], n=n)


_positive = partial(range_domain, low=1)

IDENTITIES = [
    Identity("hankel-carlitz-riordan", carlitz_riordan_det, range_domain, (8, 12)),
    Identity(
        "hankel-carlitz-riordan-shifted",
        carlitz_riordan_shifted_det,
        range_domain,
        (8, 12),
    ),
    Identity("hankel-cigler", cigler_det, _positive, (8, 12)),
    Identity("hankel-cigler-shifted", cigler_shifted_det, _positive, (8, 12)),
    Identity("tunnel-statistic", tunnel_statistic, range_domain, (9, 12)),
]
IDENTITIES_BY_NAME = {identity.name: identity for identity in IDENTITIES}
