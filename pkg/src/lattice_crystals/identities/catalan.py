"""
Identities relating Catalan triangle numbers (and their ``q``- and ``(q,t)``-analogs)
to Motzkin and Riordan numbers and to characters of the classical Lie algebras.
"""
import logging
from functools import lru_cache, partial
from math import comb
from typing import Dict, Iterator

from ..charforms import (
    DominantWeight,
    catalan_ratio_sides,
    character_weyl_via_crystal,
    dim_weyl,
    nps,
    ps_weyl,
)
from ..crystal import CartanSpec, add_weights
from ..exactpoly import (
    Q,
    catalan_triangle_q,
    exquo,
    mahonian_catalan,
    q_binomial,
    q_pochhammer,
)
from ..paths import (
    catalan_number,
    catalan_triangle,
    motzkin_number,
    motzkin_triangle,
    rect_generating,
    riordan_number,
    riordan_triangle,
    stump_qt_catalan,
    wpm_qt_catalan,
)
from ..types import Weight
from .base import (
    Comparison,
    Identity,
    IdentityReport,
    Params,
    range_domain,
    run_instance,
    triangle_domain,
)
from .qanalogs import (
    qmotzkin_tri_prime,
    qriordan_tri_prime,
    qt_catalan_prime,
    qt_catalan_tri_prime,
)

_logger = logging.getLogger(__name__)


def _weight(family: str, rank: int, weight: Weight) -> DominantWeight:
    return DominantWeight.from_weight(CartanSpec(family, rank), weight)


@lru_cache(maxsize=32)
def _character(weight: DominantWeight) -> Dict[Weight, int]:
    return character_weyl_via_crystal(weight)


def _binomial(a: int, b: int) -> int:
    """``C(a, b)`` with ``C(a, 0) = 1`` for every ``a``"""
    if b == 0:
        return 1
    return comb(a, b) if a >= 0 and b > 0 else 0


# ---- domains -------------------------------------------------------------------


def _ratio_domain(bound: int) -> Iterator[Params]:
    for n in range(2, bound + 1):
        for i in range(1, n):
            yield {"n": n, "i": i}


def _rectangle_domain(bound: int) -> Iterator[Params]:
    for total in range(2, bound + 1):
        for n in range(1, total):
            yield {"n": n, "m": total - n}


def _triples(bound: int) -> Iterator[Params]:
    for n in range(1, bound + 1):
        for s in range(n + 1):
            for m in range(s, n + 1):
                yield {"n": n, "s": s, "m": m}


# ---- Catalan triangle numbers --------------------------------------------------


def touchard(n: int, s: int) -> Comparison:
    """Cat_(2n-s+1,s) = sum_i C(n, s-2i) 2^(s-2i) Cat_(n-s+i,i)"""
    rhs = sum(
        comb(n, s - 2 * i) * 2 ** (s - 2 * i) * catalan_triangle(n - s + i, i)
        for i in range(s // 2 + 1)
    )
    return Comparison.equal(catalan_triangle(2 * n - s + 1, s), rhs)


def catalan_from_motzkin(n: int) -> Comparison:
    """Cat_(n+1) = sum_i C(n, i) Mot_i"""
    rhs = sum(comb(n, i) * motzkin_number(i) for i in range(n + 1))
    return Comparison.equal(catalan_number(n + 1), rhs)


def catalan_from_riordan(n: int) -> Comparison:
    """Cat_n = sum_i C(n, i) Rior_i"""
    rhs = sum(comb(n, i) * riordan_number(i) for i in range(n + 1))
    return Comparison.equal(catalan_number(n), rhs)


def triangle_from_motzkin(n: int, s: int) -> Comparison:
    """Cat_(2n+1-s,s) = sum_i C(n, s-i) Mot_(i+n-s,n-s)"""
    rhs = sum(
        comb(n, s - i) * motzkin_triangle(i + n - s, n - s) for i in range(s + 1)
    )
    return Comparison.equal(catalan_triangle(2 * n + 1 - s, s), rhs)


def triangle_from_riordan(n: int, s: int) -> Comparison:
    """Cat_(2n-s,s) = sum_i C(n, s-i) Rior_(i+n-s,n-s)"""
    rhs = sum(
        comb(n, s - i) * riordan_triangle(i + n - s, n - s) for i in range(s + 1)
    )
    return Comparison.equal(catalan_triangle(2 * n - s, s), rhs)


# ---- dimensions ----------------------------------------------------------------


def column_dimension_B(n: int, s: int) -> Comparison:
    """sum_k 2^k C(n, k) C(n-k, (s-k)//2) = dim V(tfw_s) = C(2n+1, s) in B_n"""
    cartan = CartanSpec("B", n)
    lhs = sum(
        2**k * comb(n, k) * comb(n - k, (s - k) // 2) for k in range(s + 1)
    )
    dim = dim_weyl(_weight("B", n, cartan.tfw(s)))
    return Comparison(lhs, dim, lhs == dim == comb(2 * n + 1, s))


def column_dimension_D(n: int, s: int) -> Comparison:
    """The type D analog of column-dimension-b, equal to C(2n - [s = n], s)"""
    cartan = CartanSpec("D", n)
    at_top = int(s == n)
    lhs = sum(
        2 ** (k - int(k == n))
        * comb(n, n - k)
        * _binomial(n - k - at_top, (s - k) // 2)
        for k in range(s % 2, s + 1, 2)
    )
    dim = dim_weyl(_weight("D", n, cartan.tfw(s)))
    return Comparison(lhs, dim, lhs == dim == comb(2 * n - at_top, s))


def near_spin_dimension_B(n: int, s: int) -> Comparison:
    """dim V(omega_n + tfw_s) = 2^n Cat_(2n+1-s,s) in B_n"""
    cartan = CartanSpec("B", n)
    weight = add_weights(cartan.fundamental_weight(n), cartan.tfw(s))
    return Comparison.equal(
        dim_weyl(_weight("B", n, weight)),
        2**n * catalan_triangle(2 * n + 1 - s, s),
    )


def near_spin_dimension_D(n: int, s: int) -> Comparison:
    """dim V(omega_n + tfw_s) = 2^(n-1) Cat_(2n-s,s) in D_n"""
    cartan = CartanSpec("D", n)
    weight = add_weights(cartan.fundamental_weight(n), cartan.tfw(s))
    return Comparison.equal(
        dim_weyl(_weight("D", n, weight)),
        2 ** (n - 1) * catalan_triangle(2 * n - s, s),
    )


# ---- principal specializations -------------------------------------------------


def near_spin_specialization(n: int, s: int) -> Comparison:
    """nps(omega_n + tfw_s) = Cat_(2n+1-s,s)(q) prod_(k<=n+1)(1+q^k) / (1+q^(n+1-s))
    in B_n"""
    cartan = CartanSpec("B", n)
    weight = add_weights(cartan.fundamental_weight(n), cartan.tfw(s))
    numerator = catalan_triangle_q(2 * n + 1 - s, s) * q_pochhammer(
        n + 1, negative=True
    )
    rhs = exquo(numerator, Q ** (n + 1 - s) + 1)
    return Comparison.equal(nps(_weight("B", n, weight)), rhs)


def catalan_q2(n: int) -> Comparison:
    """C_(n+1)(q) prod_(k<=n)(1+q^k) = nps(3 omega_n) in B_n"""
    lhs = mahonian_catalan(n + 1) * q_pochhammer(n, negative=True)
    weight = DominantWeight.from_fundamental("B", n, (0,) * (n - 1) + (3,))
    return Comparison.equal(lhs, nps(weight))


def mahonian_column_C(n: int) -> Comparison:
    """nps(omega_(n-1)) of C_(n-1) is MacMahon's C_n(q)"""
    weight = DominantWeight.from_fundamental("C", n - 1, (0,) * (n - 2) + (1,))
    return Comparison.equal(nps(weight), mahonian_catalan(n))


def column_specialization_C(n: int, s: int) -> Comparison:
    """ps(omega_s) of C_n = Cat'_(2n-s+1,s)(q, 1/q)"""
    coefficients = tuple(int(i == s) for i in range(1, n + 1))
    lhs = ps_weyl(DominantWeight.from_fundamental("C", n, coefficients))
    return Comparison.equal(lhs, qt_catalan_tri_prime(n, s).substitute_t_qinv())


def catalan_ratio(n: int, i: int) -> Comparison:
    """Cat_(2n-i-1,i)(q) / Cat'_(2n-i-1,i)(q) = q^(C(n,2)-C(n-i,2)) (1+q^(n-i)) /
    (1+q^n)"""
    return Comparison.equal(*catalan_ratio_sides(n, i))


def rectangle_q_binomial(n: int, m: int) -> Comparison:
    """The rectangle path statistic, normalized, is qbinom(n+m, n)"""
    rect = rect_generating(n, m)
    normalized = rect.polynomial.shift(-rect.valuation)
    return Comparison.equal(normalized, q_binomial(n + m, n))


# ---- q- and (q,t)-analogs ------------------------------------------------------


def stump_wpm(n: int) -> Comparison:
    """The signed-weight Cat_n(q,t) agrees with Stump's"""
    return Comparison.equal(wpm_qt_catalan(n), stump_qt_catalan(n))


def stump_specialization(n: int) -> Comparison:
    """q^C(n,2) Cat_n(q, 1/q) = C_n(q)"""
    lhs = stump_qt_catalan(n).substitute_t_qinv().shift(comb(n, 2))
    return Comparison.equal(lhs, mahonian_catalan(n))


def qmotzkin_at_one(n: int, k: int) -> Comparison:
    """Mot'_(n,k)(1) = Mot_(n,k)"""
    at_one = qmotzkin_tri_prime(n, k).evaluate(1)
    return Comparison.equal(at_one, motzkin_triangle(n, k))


def qriordan_at_one(n: int, k: int) -> Comparison:
    """Rior'_(n,k)(1) = Rior_(n,k)"""
    at_one = qriordan_tri_prime(n, k).evaluate(1)
    return Comparison.equal(at_one, riordan_triangle(n, k))


def qt_catalan_prime_at_one(n: int) -> Comparison:
    """Cat'_n(1,1) = Cat_n"""
    return Comparison.equal(qt_catalan_prime(n).evaluate(1, 1), catalan_number(n))


# ---- weight multiplicities -----------------------------------------------------


def motzkin_multiplicity(n: int, s: int, m: int) -> Comparison:
    """The omega_n + tfw_(n-m) weight space of V(omega_n + tfw_(n-s)) in B_n has
    dimension Mot_(m,s)"""
    cartan = CartanSpec("B", n)
    spin = cartan.fundamental_weight(n)
    character = _character(_weight("B", n, add_weights(spin, cartan.tfw(n - s))))
    mu = add_weights(spin, cartan.tfw(n - m))
    return Comparison.equal(character.get(mu, 0), motzkin_triangle(m, s))


def riordan_multiplicity(n: int, s: int, m: int) -> Comparison:
    """In D_(n+1), the multiplicity of omega_(n+1) + tfw_(n-m) (m - s odd) or
    omega_n + tfw_(n-m) (m - s even) in V(omega_(n+1) + tfw_(n+1-s)) is
    Rior_(m+1,s)"""
    rank = n + 1
    cartan = CartanSpec("D", rank)
    spin = cartan.fundamental_weight(rank)
    character = _character(_weight("D", rank, add_weights(spin, cartan.tfw(rank - s))))
    other = spin if (m - s) % 2 else cartan.fundamental_weight(n)
    mu = add_weights(other, cartan.tfw(n - m))
    return Comparison.equal(character.get(mu, 0), riordan_triangle(m + 1, s))


def touchard_triangle(n: int, s: int) -> IdentityReport:
    """Check the Touchard-type identity for one ``(n, s)``, ``0 <= s <= n``"""
    if not 0 <= s <= n:
        raise ValueError(f"expected 0 <= s <= n, got s={s}, n={n}")
    return run_instance(IDENTITIES_BY_NAME["touchard"], n=n, s=s)


def near_spin_nps(n: int, s: int) -> IdentityReport:
    """Check the near-spin specialization formula of ``B_n`` for one ``(n, s)``.

    A remainder in the division by ``1 + q^(n+1-s)`` is reported as a failure.
    """
    if n < 1 or not 0 <= s <= n:
        raise ValueError(f"expected n >= 1 and 0 <= s <= n, got s={s}, n={n}")
    return run_instance(IDENTITIES_BY_NAME["near-spin-nps"], n=n, s=s)


_pairs = partial(triangle_domain, low=1)
_columns = partial(triangle_domain, low=1, start=1)
_positive = partial(range_domain, low=1)
_from_two = partial(range_domain, low=2)

IDENTITIES = [
    Identity("touchard", touchard, triangle_domain, (8, 14)),
    Identity("catalan-from-motzkin", catalan_from_motzkin, range_domain, (12, 20)),
    Identity("catalan-from-riordan", catalan_from_riordan, range_domain, (12, 20)),
    Identity("triangle-from-motzkin", triangle_from_motzkin, triangle_domain, (8, 14)),
    Identity("triangle-from-riordan", triangle_from_riordan, triangle_domain, (8, 14)),
    Identity("column-dimension-b", column_dimension_B, _columns, (5, 8)),
    Identity(
        "column-dimension-d",
        column_dimension_D,
        partial(triangle_domain, low=2, start=1),
        (5, 7),
    ),
    Identity("near-spin-dimension-b", near_spin_dimension_B, _pairs, (5, 8)),
    Identity(
        "near-spin-dimension-d",
        near_spin_dimension_D,
        partial(triangle_domain, low=2),
        (5, 7),
    ),
    Identity("near-spin-nps", near_spin_specialization, _pairs, (4, 6)),
    Identity("catalan-q2", catalan_q2, _positive, (5, 7)),
    Identity("mahonian-column-c", mahonian_column_C, _from_two, (5, 7)),
    Identity("column-ps-c", column_specialization_C, _pairs, (4, 6)),
    Identity("catalan-ratio", catalan_ratio, _ratio_domain, (6, 9)),
    Identity("rectangle-q-binomial", rectangle_q_binomial, _rectangle_domain, (8, 12)),
    Identity("stump-wpm", stump_wpm, _positive, (5, 7)),
    Identity("stump-specialization", stump_specialization, _positive, (6, 8)),
    Identity(
        "qmotzkin-at-one", qmotzkin_at_one, partial(triangle_domain, name="k"), (8, 12)
    ),
    Identity(
        "qriordan-at-one", qriordan_at_one, partial(triangle_domain, name="k"), (8, 12)
    ),
    Identity("qt-catalan-prime-at-one", qt_catalan_prime_at_one, range_domain, (6, 9)),
    Identity("motzkin-multiplicity", motzkin_multiplicity, _triples, (3, 4)),
    Identity("riordan-multiplicity", riordan_multiplicity, _triples, (2, 3)),
]
IDENTITIES_BY_NAME = {identity.name: identity for identity in IDENTITIES}
