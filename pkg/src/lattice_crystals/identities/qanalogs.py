"""
``q``- and ``(q,t)``-analogs of the Motzkin, Riordan and Catalan numbers that are
defined by inverting a binomial-type expansion of a ``q``-Catalan number.

>>> str(qmotzkin_prime(2))
'q^4 + q^2'
>>> str(qriordan_tri_prime(3, 1))
'q^2 + q + 1'
"""
import logging
from functools import lru_cache
from itertools import combinations
from math import comb

from .. import limits
from ..exactpoly import (
    QT_Q,
    QT_T,
    BiLaurentPoly,
    LaurentPoly,
    catalan_triangle_q,
    mahonian_catalan,
    q_binomial,
)
from ..paths import catalan_triangle

_logger = logging.getLogger(__name__)


def _check_index(n: int):
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")


@lru_cache(maxsize=None)
def qmotzkin_prime(n: int) -> LaurentPoly:
    """``Mot'_n(q)`` from ``Cat_(n+1)(q) = sum_i q^i qbinom(n, i) Mot'_i(q)``"""
    _check_index(n)
    if n == 0:
        return LaurentPoly(1)
    rest = mahonian_catalan(n + 1)
    for i in range(n):
        rest = rest - q_binomial(n, i) * qmotzkin_prime(i).shift(i)
    return rest.shift(-n)


@lru_cache(maxsize=None)
def qmotzkin_tri_prime(n: int, k: int) -> LaurentPoly:
    """``Mot'_(n,k)(q)``, inverting
    ``Cat_(2n+1-s,s)(q) = sum_i q^(n(s-i)) qbinom(n, s-i) Mot'_(i+n-s,n-s)(q)``
    with ``k = n - s``"""
    _check_index(n)
    if k < 0 or k > n:
        return LaurentPoly()
    s = n - k
    rest = catalan_triangle_q(2 * n + 1 - s, s)
    for i in range(s):
        rest = rest - q_binomial(n, s - i) * qmotzkin_tri_prime(i + k, k).shift(
            n * (s - i)
        )
    return rest


@lru_cache(maxsize=None)
def qriordan_tri_prime(n: int, k: int) -> LaurentPoly:
    """``Rior'_(n,k)(q)``, the Riordan counterpart of :func:`qmotzkin_tri_prime`
    with weights ``q^((n-1)(s-i))``"""
    _check_index(n)
    if k < 0 or k > n:
        return LaurentPoly()
    s = n - k
    rest = catalan_triangle_q(2 * n - s, s)
    for i in range(s):
        rest = rest - q_binomial(n, s - i) * qriordan_tri_prime(i + k, k).shift(
            (n - 1) * (s - i)
        )
    return rest


def qriordan_prime(n: int) -> LaurentPoly:
    return qriordan_tri_prime(n, 0)


def _qt_bracket(j: int) -> BiLaurentPoly:
    return QT_Q**j + QT_T**j


def qt_catalan_tri_prime(n: int, s: int) -> BiLaurentPoly:
    """``Cat'_(2n-s+1,s)(q,t)``: sum over ``k <= s/2`` of ``Cat_(n-s+k,k)`` times the
    elementary symmetric function of degree ``s - 2k`` in ``q^j + t^j``,
    ``1 <= j <= n``"""
    if not 0 <= s <= n:
        raise ValueError(f"expected 0 <= s <= n, got s={s}, n={n}")
    limits.check(
        sum(comb(n, s - 2 * k) for k in range(s // 2 + 1)),
        f"the subsets behind Cat'_({2 * n - s + 1},{s})(q,t)",
    )
    brackets = [_qt_bracket(j) for j in range(1, n + 1)]
    total = BiLaurentPoly()
    for k in range(s // 2 + 1):
        elementary = BiLaurentPoly()
        for subset in combinations(brackets, s - 2 * k):
            term = BiLaurentPoly(1)
            for factor in subset:
                term = term * factor
            elementary = elementary + term
        total = total + elementary * catalan_triangle(n - s + k, k)
    return total


def qt_catalan_prime(n: int) -> BiLaurentPoly:
    """``Cat'_n(q,t)``, the ``s = n - 1`` case of :func:`qt_catalan_tri_prime` in
    rank ``n - 1``"""
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    if n == 0:
        return BiLaurentPoly(1)
    return qt_catalan_tri_prime(n - 1, n - 1)
