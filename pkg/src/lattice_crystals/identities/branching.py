"""
Branching and specialization identities, spin and Catalan rectangles and the
multiplicities of tensor powers.
"""
import logging
from functools import partial
from math import comb
from typing import Iterator, Optional, Tuple

from ..charforms import (
    DominantWeight,
    branching_nps_B_to_D,
    catalan_hankel_product,
    dim_rectangle_C,
    dim_spin_rectangle_B,
    dim_weyl,
    nps,
    ps_weyl,
    rectangle_hankel_C,
    spin_power_hankel_B,
    spin_power_multiplicity_B,
    spin_power_oracle_B,
    spin_rect_hankel,
    wedge_multiplicity_via_dimension,
    wedge_power_hankel_C,
    wedge_power_multiplicity_C,
    wedge_power_oracle_C,
)
from ..crystal import CartanSpec, wedge_removal_mismatches
from ..exactpoly import LaurentPoly, q_binomial, q_int, q_pochhammer
from ..lgvdet import det_division_free, hankel
from ..rigid import strict_partitions
from .base import (
    Comparison,
    Identity,
    IdentityReport,
    Params,
    grid_domain,
    range_domain,
    triangle_domain,
    verify,
)

_logger = logging.getLogger(__name__)


def _fundamental(family: str, rank: int, *indices: int) -> DominantWeight:
    coefficients = [0] * rank
    for i in indices:
        if i:
            coefficients[i - 1] += 1
    return DominantWeight.from_fundamental(family, rank, coefficients)


def _last(family: str, rank: int, times: int) -> DominantWeight:
    """``times * omega_rank``"""
    return DominantWeight.from_fundamental(
        family, rank, (0,) * (rank - 1) + (times,)
    )


def _columns_a(bound: int) -> Iterator[Params]:
    for n in range(2, bound + 1):
        for k in range(1, n):
            yield {"n": n, "k": k}


def _powers(bound: int) -> Iterator[Params]:
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            yield {"n": n, "m": m}


def _okada(bound: int) -> Iterator[Params]:
    for n in range(2, bound + 1):
        for r in range(1, bound + 1):
            yield {"n": n, "r": r}


# ---- specializations -----------------------------------------------------------


def type_a_near_rectangle(n: int, k: int) -> Comparison:
    """ps(varpi_n + varpi_k) of A_n = q^(C(n,2)+C(k,2)) [n-k+1]_q qbinom(n+2, k)"""
    rhs = (q_int(n - k + 1) * q_binomial(n + 2, k)).shift(comb(n, 2) + comb(k, 2))
    return Comparison.equal(ps_weyl(_fundamental("A", n, n, k)), rhs)


def type_a_column(n: int, k: int) -> Comparison:
    """ps(varpi_k) of A_(n-1) = q^C(k,2) qbinom(n, k)"""
    rhs = q_binomial(n, k).shift(comb(k, 2))
    return Comparison.equal(ps_weyl(_fundamental("A", n - 1, k)), rhs)


def binomial_columns_B(n: int, s: int) -> Comparison:
    """nps(tfw_s) of B_n = qbinom(2n+1, s)"""
    cartan = CartanSpec("B", n)
    weight = DominantWeight.from_weight(cartan, cartan.tfw(s))
    return Comparison.equal(nps(weight), q_binomial(2 * n + 1, s))


def spin_B(n: int) -> Comparison:
    """nps(omega_n) of B_n counts strict partitions with parts at most n"""
    terms: dict = {}
    for nu in strict_partitions(n):
        terms[sum(nu)] = terms.get(sum(nu), 0) + 1
    lhs, rhs = nps(_last("B", n, 1)), LaurentPoly(terms)
    return Comparison(lhs, rhs, lhs == rhs == q_pochhammer(n, negative=True))


def branching_B_to_D(n: int, s: int) -> Comparison:
    """nps(tfw_s) of B_n equals the restriction to D_n, specialized"""
    check = branching_nps_B_to_D(s, n)
    return Comparison.equal(check.lhs, check.rhs)


BRANCHING_KINDS = {
    "type-a": "branching-type-a",
    "column-a": "column-type-a",
    "binomial-b": "binomial-columns-b",
    "spin-b": "spin-b",
}


def branching_specializations(kind: str, bound: Optional[int] = None) -> IdentityReport:
    """Verify one family of specialization identities: ``type-a`` (near-rectangles
    of ``A_n``), ``column-a``, ``binomial-b`` (columns of ``B_n``) or ``spin-b``"""
    key = kind.replace("_", "-")
    if key not in BRANCHING_KINDS:
        raise ValueError(f"kind must be one of {sorted(BRANCHING_KINDS)}, got {kind!r}")
    return verify(IDENTITIES_BY_NAME[BRANCHING_KINDS[key]], bound)


# ---- rectangles ----------------------------------------------------------------


def spin_rectangle_hankel(n: int, r: int) -> Comparison:
    """det[C(2(n+i+j)+1, n+i+j)] = dim V(r tfw_n) in B_n = dim V(2r omega_(n+1)) in
    D_(n+1)"""
    lhs = spin_rect_hankel(r, n)
    rhs = dim_weyl(_last("B", n, 2 * r))
    return Comparison(lhs, rhs, lhs == rhs == dim_weyl(_last("D", n + 1, 2 * r)))


def okada_hankel_D(n: int, r: int) -> Comparison:
    """det[C(2(n+i+j), n+i+j)] = 2^r dim V(2r omega_n) in D_n"""
    lhs = det_division_free(hankel(lambda k: comb(2 * (n + k), n + k), r))
    return Comparison.equal(lhs, 2**r * dim_weyl(_last("D", n, 2 * r)))


def spin_rectangles_B(n: int, r: int) -> Comparison:
    """The product formula for dim V(r omega_n) in B_n"""
    return Comparison.equal(dim_spin_rectangle_B(r, n), dim_weyl(_last("B", n, r)))


def catalan_hankel_rectangle(n: int, r: int) -> Comparison:
    """det[Cat_(n+1+i+j)] = dim V(r omega_n) in C_n, also as a closed product"""
    lhs, rhs = rectangle_hankel_C(r, n), dim_weyl(_last("C", n, r))
    closed = {catalan_hankel_product(r, n), dim_rectangle_C(r, n)}
    return Comparison(lhs, rhs, lhs == rhs and closed == {rhs})


# ---- tensor powers -------------------------------------------------------------


def _against_oracle(oracle, multiplicity) -> Tuple[dict, dict]:
    found = {weight: multiplicity(weight) for weight in sorted(oracle)}
    return found, {weight: oracle[weight] for weight in sorted(oracle)}


def spin_power_B(n: int, m: int) -> Comparison:
    """Determinants of Catalan triangle numbers give the multiplicities in
    B(omega_n)^(2m)"""
    cartan = CartanSpec("B", n)
    oracle = spin_power_oracle_B(n, m)
    lhs, rhs = _against_oracle(
        oracle,
        lambda w: spin_power_multiplicity_B(DominantWeight.from_weight(cartan, w), m),
    )
    trivial = spin_power_hankel_B(n, m) == oracle.get(cartan.zero, 0)
    return Comparison(lhs, rhs, lhs == rhs and trivial)


def wedge_power_C(n: int, m: int) -> Comparison:
    """Determinants of Catalan triangle numbers give the multiplicities in the m-th
    tensor power of the exterior algebra of C_n"""
    cartan = CartanSpec("C", n)
    oracle = wedge_power_oracle_C(n, m)

    def multiplicity(w):
        weight = DominantWeight.from_weight(cartan, w)
        return wedge_power_multiplicity_C(weight, m)

    lhs, rhs = _against_oracle(oracle, multiplicity)
    by_dimension = all(
        wedge_multiplicity_via_dimension(DominantWeight.from_weight(cartan, w), m)
        == mult
        for w, mult in rhs.items()
    )
    trivial = wedge_power_hankel_C(n, m) == oracle.get(cartan.zero, 0)
    return Comparison(lhs, rhs, lhs == rhs and by_dimension and trivial)


def wedge_pair_removal_C(n: int) -> Comparison:
    """Pair removal maps every wedge column of C_n to the KN column reached by
    crystal transport"""
    mismatches = wedge_removal_mismatches(n)
    if mismatches:
        _logger.debug(f"Pair removal disagrees with transport on {mismatches}")
    return Comparison.equal(len(mismatches), 0)


IDENTITIES = [
    Identity(
        "branching-type-a",
        type_a_near_rectangle,
        partial(triangle_domain, low=1, name="k"),
        (4, 6),
    ),
    Identity("column-type-a", type_a_column, _columns_a, (6, 9)),
    Identity(
        "binomial-columns-b",
        binomial_columns_B,
        partial(triangle_domain, low=1),
        (4, 6),
    ),
    Identity("spin-b", spin_B, partial(range_domain, low=1), (5, 7)),
    Identity(
        "branching-b-to-d", branching_B_to_D, partial(triangle_domain, low=2), (4, 5)
    ),
    Identity("spin-rectangle-hankel", spin_rectangle_hankel, grid_domain, (4, 6)),
    Identity("okada-hankel-d", okada_hankel_D, _okada, (4, 6)),
    Identity("spin-rectangles-b", spin_rectangles_B, grid_domain, (5, 7)),
    Identity("catalan-hankel-rectangle", catalan_hankel_rectangle, grid_domain, (5, 7)),
    Identity("spin-power-b", spin_power_B, _powers, (2, 3)),
    Identity("wedge-power-c", wedge_power_C, _powers, (2, 3)),
    Identity(
        "wedge-pair-removal", wedge_pair_removal_C, partial(range_domain, low=1), (3, 4)
    ),
]
IDENTITIES_BY_NAME = {identity.name: identity for identity in IDENTITIES}
