"""
Conjectures checked on finite ranges. A scan never proves anything: a verified
report only states that no counterexample exists up to the bound.
"""
import logging
from functools import partial
from typing import Iterator, Optional

from ..errors import InexactDivision
from ..exactpoly import LaurentPoly, Q, exquo, exquo_qt_minus_one, normalize_valuation
from ..paths import stump_qt_catalan
from .base import (
    Comparison,
    Identity,
    IdentityReport,
    Params,
    Registry,
    range_domain,
    triangle_domain,
    verify,
)
from .hankels import motzkin_hankel
from .qanalogs import (
    qmotzkin_prime,
    qmotzkin_tri_prime,
    qriordan_tri_prime,
    qt_catalan_prime,
)

_logger = logging.getLogger(__name__)


def _nonnegative(poly) -> Comparison:
    return Comparison(poly, None, poly.is_nonnegative())


def _shifts(bound: int) -> Iterator[Params]:
    for n in range(1, bound + 1):
        for k in range(1, bound + 1):
            yield {"n": n, "k": k}


def _thirds(n: int) -> LaurentPoly:
    """``sum q^(3k)`` for ``0 <= k <= n // 3``"""
    return LaurentPoly({3 * k: 1 for k in range(n // 3 + 1)})


def motzkin_positive(n: int) -> Comparison:
    """Mot'_n(q) has nonnegative coefficients"""
    return _nonnegative(qmotzkin_prime(n))


def motzkin_triangle_positive(n: int, k: int) -> Comparison:
    """Mot'_(n,k)(q) has nonnegative coefficients"""
    return _nonnegative(qmotzkin_tri_prime(n, k))


def riordan_triangle_positive(n: int, k: int) -> Comparison:
    """Rior'_(n,k)(q) has nonnegative coefficients"""
    return _nonnegative(qriordan_tri_prime(n, k))


def qt_divisibility(n: int) -> Comparison:
    """Cat_n(q,t) - Cat'_n(q,t) = (qt - 1) f_n(q,t) with f_n nonnegative"""
    difference = stump_qt_catalan(n) - qt_catalan_prime(n)
    quotient = exquo_qt_minus_one(difference)
    return Comparison(difference, quotient, quotient.is_nonnegative())


def shifted_motzkin_hankel(n: int, k: int) -> Comparison:
    """det[Mot^dagger_(2k+i+j)]_(i,j=0)^(n-1) has nonnegative coefficients"""
    return _nonnegative(motzkin_hankel(2 * k, n))


def _two_shifted_target(n: int) -> LaurentPoly:
    if n % 3 == 0:
        return LaurentPoly({k: 1 for k in range(1, n + 1) if k % 3 != 1})
    return (1 + Q) * _thirds(n)


def factored_motzkin_2shifted_f(n: int) -> Comparison:
    """det[Mot^dagger_(2+i+j)]_(i,j=0)^(n-1) is f_n(q) up to a power of q"""
    det, target = motzkin_hankel(2, n), _two_shifted_target(n)
    if det.is_zero():
        return Comparison(det, target, False)
    return Comparison.equal(normalize_valuation(det)[1], normalize_valuation(target)[1])


def factored_motzkin_2shifted_g(n: int) -> Comparison:
    """det[Mot^dagger_(3+i+j)]_(i,j=0)^(n-1) = (-1)^(n//3) q^c g_n(q) with g_n
    nonnegative, g_n = (1+q)^2 t_n^2 when n = 1 mod 3 and t_n | g_n when n = 2 mod 3"""
    det = motzkin_hankel(3, n)
    if det.is_zero():
        return Comparison(det, None, False)
    _, g = normalize_valuation((-1) ** (n // 3) * det)
    t = _thirds(n)
    holds = g.is_nonnegative()
    if n % 3 == 1:
        holds = holds and g == ((1 + Q) * t) ** 2
    elif n % 3 == 2:
        try:
            exquo(g, t)
        except InexactDivision:
            holds = False
    return Comparison(det, g, holds)


_SAME_LABEL = (
    "the shifted Motzkin Hankel conjecture has a second, different statement; "
    "it is scanned as {}"
)

SCANS = [
    Identity("motzkin-pos", motzkin_positive, range_domain, (12, 16), "scan"),
    Identity(
        "motzkin-tri-pos",
        motzkin_triangle_positive,
        partial(triangle_domain, name="k"),
        (10, 14),
        "scan",
    ),
    Identity(
        "riordan-tri-pos",
        riordan_triangle_positive,
        partial(triangle_domain, name="k"),
        (10, 14),
        "scan",
    ),
    Identity(
        "qt-divisibility",
        qt_divisibility,
        partial(range_domain, low=1),
        (6, 8),
        "scan",
    ),
    Identity(
        "shifted-motzkin-hankel", shifted_motzkin_hankel, _shifts, (4, 6), "scan"
    ),
    Identity(
        "factored-motzkin-2shifted-f",
        factored_motzkin_2shifted_f,
        partial(range_domain, low=1),
        (8, 12),
        "scan",
        _SAME_LABEL.format("factored-motzkin-2shifted-g"),
    ),
    Identity(
        "factored-motzkin-2shifted-g",
        factored_motzkin_2shifted_g,
        partial(range_domain, low=1),
        (8, 12),
        "scan",
        _SAME_LABEL.format("factored-motzkin-2shifted-f"),
    ),
]
SCANS_BY_NAME = Registry(SCANS)


def conjecture_scan(name: str, bound: Optional[int] = None) -> IdentityReport:
    """Scan one conjecture up to ``bound`` (by default the active profile's)"""
    return verify(SCANS_BY_NAME[name.replace("_", "-")], bound)
