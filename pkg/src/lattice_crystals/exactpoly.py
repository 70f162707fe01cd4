"""
Exact sparse Laurent polynomials in ``q`` (and in ``q, t``) with integer
coefficients, together with the usual q-analogs.

All values are immutable; arithmetic never leaves the integers.

>>> q_binomial(4, 2)
LaurentPoly('q^4 + q^3 + 2*q^2 + q + 1')
>>> normalize_valuation(Q**3 + Q**5)
(3, LaurentPoly('q^2 + 1'))
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import InexactDivision, ZeroValuation

_logger = logging.getLogger(__name__)

Exponent2 = Tuple[int, int]


def _prune(terms: Mapping) -> Dict:
    return {e: c for e, c in terms.items() if c != 0}


def _fmt_monomial(coeff: int, powers: Iterable[Tuple[str, int]], first: bool) -> str:
    factors = []
    for var, exp in powers:
        if exp == 1:
            factors.append(var)
        elif exp != 0:
            factors.append(f"{var}^{exp}")
    sign = "-" if coeff < 0 else ("" if first else "+")
    magnitude = abs(coeff)
    if not factors:
        body = str(magnitude)
    elif magnitude == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(magnitude)] + factors)
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


class LaurentPoly:
    """Sparse Laurent polynomial in one variable ``q``.

    The canonical form never stores a zero coefficient, so structural equality
    of the term maps is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int] = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        self._terms: Dict[int, int] = _prune(terms)
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return cls(value)
        return NotImplemented

    # ---- views -------------------------------------------------------------

    def terms(self) -> Iterator[Tuple[int, int]]:
        """``(exponent, coefficient)`` pairs sorted by exponent"""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int:
        if not self._terms:
            raise ZeroValuation()
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ZeroValuation()
        return max(self._terms)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._terms)

    def evaluate(self, value):
        return sum(c * value**e for e, c in self._terms.items())

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``"""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace ``q`` by ``q**k``"""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    # ---- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[int, int] = {}
        for (e1, c1), (e2, c2) in product(self._terms.items(), other._terms.items()):
            terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise InexactDivision(1, self, "not a monomial")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise InexactDivision(1, self, "not a unit")
            return LaurentPoly({e * k: c ** (-k)})
        result, base = LaurentPoly(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), reverse=True)
        return "".join(
            _fmt_monomial(c, [("q", e)], i == 0) for i, (e, c) in enumerate(items)
        )

    def __repr__(self):
        return f"{self.__class__.__name__}('{self}')"


class BiLaurentPoly:
    """Sparse Laurent polynomial in two variables ``q, t``.

    Terms are keyed by ``(a, b)`` for ``q^a t^b``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent2, int], int] = 0):
        if isinstance(terms, int):
            terms = {(0, 0): terms}
        self._terms: Dict[Exponent2, int] = _prune(terms)
        self._hash = None

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "BiLaurentPoly":
        return cls({(a, b): coeff})

    @classmethod
    def coerce(cls, value) -> "BiLaurentPoly":
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return cls(value)
        return NotImplemented

    def terms(self) -> Iterator[Tuple[Exponent2, int]]:
        """``((a, b), coefficient)`` pairs in lexicographic exponent order"""
        return iter(sorted(self._terms.items()))

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def swap(self) -> "BiLaurentPoly":
        """Exchange the roles of ``q`` and ``t``"""
        return BiLaurentPoly({(b, a): c for (a, b), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def evaluate(self, q, t):
        return sum(c * q**a * t**b for (a, b), c in self._terms.items())

    def substitute_t_qinv(self) -> LaurentPoly:
        terms: Dict[int, int] = {}
        for (a, b), c in self._terms.items():
            terms[a - b] = terms.get(a - b, 0) + c
        return LaurentPoly(terms)

    def __add__(self, other):
        other = BiLaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return BiLaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = BiLaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = BiLaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent2, int] = {}
        for ((a1, b1), c1), ((a2, b2), c2) in product(
            self._terms.items(), other._terms.items()
        ):
            key = (a1 + a2, b1 + b2)
            terms[key] = terms.get(key, 0) + c1 * c2
        return BiLaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = BiLaurentPoly(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = BiLaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        # total degree first, then by power of q
        items = sorted(
            self._terms.items(),
            key=lambda kv: (kv[0][0] + kv[0][1], kv[0]),
            reverse=True,
        )
        return "".join(
            _fmt_monomial(c, [("q", a), ("t", b)], i == 0)
            for i, ((a, b), c) in enumerate(items)
        )

    def __repr__(self):
        return f"{self.__class__.__name__}('{self}')"


def _strip(exponents: Iterable[int]) -> Tuple[int, ...]:
    key = tuple(exponents)
    end = len(key)
    while end and key[end - 1] == 0:
        end -= 1
    return key[:end]


def _add_keys(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return _strip(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


class GroupAlgebraElement:
    """Element of the group algebra ``Z[x_1^(+-1), x_2^(+-1), ...]`` of a weight
    lattice, i.e. a finite map from exponent vectors to integers.

    Exponent vectors are compared up to trailing zeros, so elements built for
    different numbers of variables can be mixed freely.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Tuple[int, ...], int], int] = 0):
        if isinstance(terms, int):
            terms = {(): terms}
        merged: Dict[Tuple[int, ...], int] = {}
        for key, c in terms.items():
            key = _strip(key)
            merged[key] = merged.get(key, 0) + c
        self._terms = _prune(merged)
        self._hash = None

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: int = 1):
        return cls({tuple(exponents): coeff})

    @classmethod
    def coerce(cls, value) -> "GroupAlgebraElement":
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return cls(value)
        return NotImplemented

    def terms(self) -> Iterator[Tuple[Tuple[int, ...], int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self._terms.get(_strip(exponents), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def support_size(self) -> int:
        """Number of variables actually involved"""
        return max((len(k) for k in self._terms), default=0)

    def as_dict(self, size: int) -> Dict[Tuple[int, ...], int]:
        """The terms with exponent vectors padded to ``size`` variables"""
        if self.support_size() > size:
            raise ValueError(f"{self} involves more than {size} variables")
        return {k + (0,) * (size - len(k)): c for k, c in self._terms.items()}

    def specialize(self, powers: Iterable[int]) -> LaurentPoly:
        """Substitute ``x_i = q^powers[i]``"""
        powers = tuple(powers)
        if self.support_size() > len(powers):
            raise ValueError(f"{self} involves more than {len(powers)} variables")
        result: Dict[int, int] = {}
        for key, c in self._terms.items():
            e = sum(a * p for a, p in zip(key, powers))
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    def evaluate(self, value: int = 1) -> int:
        return sum(c * value ** sum(k) for k, c in self._terms.items())

    def __add__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return self.__class__(terms)

    __radd__ = __add__

    def __neg__(self):
        return self.__class__({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Tuple[int, ...], int] = {}
        for (k1, c1), (k2, c2) in product(self._terms.items(), other._terms.items()):
            key = _add_keys(k1, k2)
            terms[key] = terms.get(key, 0) + c1 * c2
        return self.__class__(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        return "".join(
            _fmt_monomial(c, [(f"x{i + 1}", a) for i, a in enumerate(k)], i == 0)
            for i, (k, c) in enumerate(self.terms())
        )

    def __repr__(self):
        return f"{self.__class__.__name__}('{self}')"


Q = LaurentPoly.monomial(1)
QT_Q = BiLaurentPoly.monomial(1, 0)
QT_T = BiLaurentPoly.monomial(0, 1)


# ---- exact division ---------------------------------------------------------


def exquo(dividend: LaurentPoly, divisor: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials.

    Raises :exc:`InexactDivision` if the remainder is not zero.

    >>> exquo(Q**2 - 1, Q - 1)
    LaurentPoly('q + 1')
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if dividend.is_zero():
        return LaurentPoly()
    low = divisor.valuation()
    top = divisor.degree()
    lead = divisor.coefficient(top)
    remainder = dict(dividend._terms)
    quotient: Dict[int, int] = {}
    floor = dividend.valuation() - low
    while remainder:
        deg = max(remainder)
        shift = deg - top
        if shift < floor:
            break
        coeff, rest = divmod(remainder[deg], lead)
        if rest:
            break
        quotient[shift] = coeff
        for e, c in divisor._terms.items():
            new = remainder.get(e + shift, 0) - coeff * c
            if new:
                remainder[e + shift] = new
            else:
                remainder.pop(e + shift, None)
    if remainder:
        raise InexactDivision(dividend, divisor, LaurentPoly(remainder))
    return LaurentPoly(quotient)


def exquo_qt_minus_one(p: BiLaurentPoly) -> BiLaurentPoly:
    """Exact division by ``q*t - 1``.

    Since multiplication by ``q*t`` preserves ``a - b`` for every term ``q^a t^b``,
    the division splits into univariate divisions by ``u - 1`` with ``u = q*t``.
    """
    classes: Dict[int, Dict[int, int]] = {}
    for (a, b), c in p._terms.items():
        classes.setdefault(a - b, {})[b] = c
    quotient: Dict[Exponent2, int] = {}
    for diff, terms in classes.items():
        try:
            part = exquo(LaurentPoly(terms), Q - 1)
        except InexactDivision as ex:
            raise InexactDivision(p, "q*t - 1", ex.remainder) from None
        for b, c in part.terms():
            quotient[(b + diff, b)] = c
    return BiLaurentPoly(quotient)


# ---- q-analogs -----------------------------------------------------------------


def q_int(n: int) -> LaurentPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``"""
    if n < 0:
        raise ValueError(f"q_int expects n >= 0, got {n}")
    return LaurentPoly({e: 1 for e in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    result = LaurentPoly(1)
    for k in range(1, n + 1):
        result = result * q_int(k)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient, ``0`` outside ``0 <= k <= n``.

    Computed from the product form with one exact division at the end.
    """
    if k < 0 or k > n or n < 0:
        return LaurentPoly()
    k = min(k, n - k)
    numerator, denominator = LaurentPoly(1), LaurentPoly(1)
    for i in range(1, k + 1):
        numerator = numerator * (1 - Q ** (n - k + i))
        denominator = denominator * (1 - Q**i)
    return exquo(numerator, denominator)


def q_pochhammer(n: int, negative: bool = False) -> LaurentPoly:
    """``(q; q)_n`` or, with ``negative=True``, ``(-q; q)_n``"""
    sign = 1 if negative else -1
    result = LaurentPoly(1)
    for k in range(1, n + 1):
        result = result * (1 + sign * Q**k)
    return result


def normalize_valuation(p: LaurentPoly) -> Tuple[int, LaurentPoly]:
    """Split ``p`` as ``q^shift * r`` with ``r`` having a nonzero constant term"""
    shift = p.valuation()
    return shift, p.shift(-shift)


def substitute_t_qinv(p: BiLaurentPoly) -> LaurentPoly:
    return p.substitute_t_qinv()


def mahonian_catalan(n: int) -> LaurentPoly:
    """MacMahon's q-Catalan number ``qbinom(2n, n) / [n+1]_q``"""
    return exquo(q_binomial(2 * n, n), q_int(n + 1))


def catalan_triangle_q(n: int, k: int) -> LaurentPoly:
    """``q^-k (qbinom(n+k, k) - qbinom(n+k, k-1))``, the q-analog of ``Cat_(n,k)``"""
    if k < 0 or k > n:
        return LaurentPoly()
    return (q_binomial(n + k, k) - q_binomial(n + k, k - 1)).shift(-k)
