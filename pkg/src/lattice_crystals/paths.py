"""
Lattice words (``N``/``E`` and ``U``/``H``/``D``), triangle numbers and the path
statistics used to specialize characters.

Conventions:

- ``E`` is the step ``(x, y) -> (x + 1, y)`` and ``N`` is ``(x, y) -> (x, y + 1)``.
- A *partial Dyck word* in ``Dyck_(n,k)`` has ``n`` letters ``E``, ``k`` letters
  ``N`` and every prefix satisfies ``#N <= #E``.
- Signed letters encode the alphabet ``1, 1bar, 2, 2bar, ...`` as integers, with
  ``-k`` standing for ``kbar``.

>>> catalan_triangle(4, 3)
14
>>> path_weight_w("EENN")
(-1, 2)
"""
import logging
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import limits
from .errors import InvalidWord
from .exactpoly import BiLaurentPoly, LaurentPoly, Q
from .types import SignedLetter

_logger = logging.getLogger(__name__)


class LatticeWord(str):
    """A word over ``{N, E}`` stored as a plain string"""

    @property
    def n_E(self) -> int:
        return self.count("E")

    @property
    def n_N(self) -> int:
        return self.count("N")

    def coordinates(self) -> List[Tuple[int, int]]:
        return coordinates(self)


class MotzkinWord(str):
    """A word over ``{U, H, D}`` stored as a plain string"""

    def heights(self) -> List[int]:
        h, result = 0, [0]
        for step in self:
            h += {"U": 1, "H": 0, "D": -1}[step]
            result.append(h)
        return result


class PathStatistics(NamedTuple):
    area: int
    des: Tuple[int, ...]
    maj_N: int
    maj_E: int
    w_plus: int
    w_minus: int
    signed_weight: int


# ---- predicates ----------------------------------------------------------------


def coordinates(word: str, start: Tuple[int, int] = (0, 0)) -> List[Tuple[int, int]]:
    """Starting position of every step followed by the endpoint"""
    x, y = start
    points = [(x, y)]
    for step in word:
        if step == "E":
            x += 1
        elif step == "N":
            y += 1
        else:
            raise InvalidWord(word, "lattice word over {N, E}")
        points.append((x, y))
    return points


def is_partial_dyck(word: str) -> bool:
    balance = 0
    for step in word:
        if step == "E":
            balance += 1
        elif step == "N":
            balance -= 1
        else:
            return False
        if balance < 0:
            return False
    return True


def is_dyck(word: str) -> bool:
    return is_partial_dyck(word) and word.count("E") == word.count("N")


def is_conjugate_partial_dyck(word: str) -> bool:
    """Reverse the word and swap ``E <-> N``: the result must be partial Dyck"""
    return is_partial_dyck(conjugate_word(word))


def conjugate_word(word: str) -> str:
    return word[::-1].translate(str.maketrans("EN", "NE"))


def is_motzkin(word: str, end_height: Optional[int] = None) -> bool:
    h = 0
    for step in word:
        if step not in "UHD":
            return False
        h += {"U": 1, "H": 0, "D": -1}[step]
        if h < 0:
            return False
    return end_height is None or h == end_height


def is_riordan(word: str, end_height: Optional[int] = None) -> bool:
    if not is_motzkin(word, end_height):
        return False
    h = 0
    for step in word:
        if step == "H" and h == 0:
            return False
        h += {"U": 1, "H": 0, "D": -1}[step]
    return True


def _require(word: str, predicate, kind: str):
    if not predicate(word):
        raise InvalidWord(word, kind)


# ---- triangle numbers ----------------------------------------------------------


@lru_cache(maxsize=None)
def catalan_triangle(n: int, k: int) -> int:
    """``Cat_(n,k) = C(n+k, k) - C(n+k, k-1)``, zero outside ``0 <= k <= n``"""
    if k < 0 or k > n:
        return 0
    return comb(n + k, k) - (comb(n + k, k - 1) if k >= 1 else 0)


def catalan_number(n: int) -> int:
    return catalan_triangle(n, n)


@lru_cache(maxsize=None)
def motzkin_triangle(n: int, k: int) -> int:
    """Number of Motzkin paths from ``(0, 0)`` to ``(n, k)``"""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return (
        motzkin_triangle(n - 1, k)
        + motzkin_triangle(n - 1, k - 1)
        + motzkin_triangle(n - 1, k + 1)
    )


@lru_cache(maxsize=None)
def riordan_triangle(n: int, k: int) -> int:
    """Number of Riordan paths (no level step at height 0) ending at ``(n, k)``"""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    level = riordan_triangle(n - 1, k) if k > 0 else 0
    return level + riordan_triangle(n - 1, k - 1) + riordan_triangle(n - 1, k + 1)


def riordan_triangle_from_motzkin(n: int, k: int) -> int:
    """``Rior_(n,k)`` as the alternating sum of ``Mot_(n,j)`` over ``j >= k``,
    from ``Mot_(n,k) = Rior_(n,k) + Rior_(n,k+1)``"""
    return sum((-1) ** i * motzkin_triangle(n, k + i) for i in range(n - k + 1))


def motzkin_number(n: int) -> int:
    return motzkin_triangle(n, 0)


def riordan_number(n: int) -> int:
    return riordan_triangle(n, 0)


# ---- enumeration ---------------------------------------------------------------


def _partial_dyck(n: int, k: int, prefix: str, e: int, nn: int) -> Iterator[str]:
    if e == n and nn == k:
        yield prefix
        return
    if e < n:
        yield from _partial_dyck(n, k, prefix + "E", e + 1, nn)
    if nn < k and nn < e:
        yield from _partial_dyck(n, k, prefix + "N", e, nn + 1)


def enumerate_partial_dyck(n: int, k: int) -> List[LatticeWord]:
    """All words of ``Dyck_(n,k)`` in lexicographic order"""
    if n < 0 or k < 0:
        raise ValueError(f"expected n, k >= 0, got ({n}, {k})")
    limits.check(catalan_triangle(n, k), f"Dyck_({n},{k})")
    return [LatticeWord(w) for w in _partial_dyck(n, k, "", 0, 0)]


def enumerate_dyck(n: int) -> List[LatticeWord]:
    return enumerate_partial_dyck(n, n)


def enumerate_conjugate_partial_dyck(i: int, j: int) -> List[LatticeWord]:
    """Words with ``i`` letters ``E`` and ``j`` letters ``N`` whose conjugate is
    partial Dyck"""
    words = [LatticeWord(conjugate_word(w)) for w in enumerate_partial_dyck(j, i)]
    return sorted(words)


def enumerate_rectangle(n: int, m: int) -> List[LatticeWord]:
    """All words with ``n`` letters ``N`` and ``m`` letters ``E``"""
    limits.check(comb(n + m, n), f"R_({n},{m})")
    words = []
    for north in combinations(range(n + m), n):
        steps = ["E"] * (n + m)
        for i in north:
            steps[i] = "N"
        words.append("".join(steps))
    return [LatticeWord(w) for w in sorted(words)]


def _motzkin(length: int, end: int, riordan: bool) -> Iterator[str]:
    def walk(prefix: str, h: int) -> Iterator[str]:
        remaining = length - len(prefix)
        if abs(h - end) > remaining:
            return
        if remaining == 0:
            yield prefix
            return
        if h > 0:
            yield from walk(prefix + "D", h - 1)
        if h > 0 or not riordan:
            yield from walk(prefix + "H", h)
        yield from walk(prefix + "U", h + 1)

    return walk("", 0)


def enumerate_motzkin(n: int, k: int = 0) -> List[MotzkinWord]:
    limits.check(motzkin_triangle(n, k), f"Motzkin paths to ({n},{k})")
    return [MotzkinWord(w) for w in _motzkin(n, k, riordan=False)]


def enumerate_riordan(n: int, k: int = 0) -> List[MotzkinWord]:
    limits.check(riordan_triangle(n, k), f"Riordan paths to ({n},{k})")
    return [MotzkinWord(w) for w in _motzkin(n, k, riordan=True)]


def riordan_alternative_words(n: int) -> List[str]:
    """Words over ``{e, n}`` in the block encoding of Riordan paths.

    A word is a concatenation of the blocks ``e``, ``ne`` and ``nne`` (``n`` letters
    ``e`` in total). The height after a prefix is ``#e - #n``, which must stay
    non-negative, and an ``ne`` block cannot end at height 0.
    """
    result = []

    def build(prefix: str, blocks: int, height: int):
        if blocks == n:
            if height == 0:
                result.append(prefix)
            return
        for block, delta in (("e", 1), ("ne", 0), ("nne", -1)):
            new = height + delta
            if new < 0 or (block == "ne" and new == 0):
                continue
            build(prefix + block, blocks + 1, new)

    build("", 0, 0)
    return sorted(result)


_BLOCKS = {"e": "U", "ne": "H", "nne": "D"}


def alternative_to_riordan(word: str) -> MotzkinWord:
    steps, block = [], ""
    for letter in word:
        block += letter
        if letter == "e":
            if block not in _BLOCKS:
                raise InvalidWord(word, "block word over {e, ne, nne}")
            steps.append(_BLOCKS[block])
            block = ""
    if block:
        raise InvalidWord(word, "block word over {e, ne, nne}")
    return MotzkinWord("".join(steps))


# ---- weightings ----------------------------------------------------------------


def letter_at(s: int) -> SignedLetter:
    """Weight of an ``N`` step starting on the anti-diagonal ``X + Y = s``"""
    return (s + 1) // 2 if s % 2 else -(s // 2)


def path_weight_w(word: str, start: Tuple[int, int] = (0, 0)) -> Tuple[int, ...]:
    """The weighting ``w`` of every ``N`` step of a partial Dyck word, in order"""
    _require(word, is_partial_dyck, "partial Dyck word")
    points = coordinates(word, start)
    return tuple(
        letter_at(x + y) for (x, y), step in zip(points, word) if step == "N"
    )


def _strip_fixed_first_e(word: str) -> Tuple[str, int]:
    """Split off the fixed first ``E`` of a Dyck word; return word and rank"""
    if is_dyck(word):
        if not word:
            return word, 0
        # The first step weighs 0bar and carries no information.
        return word[1:], word.count("E") - 1
    n_e, n_n = word.count("E"), word.count("N")
    if (n_e + n_n) % 2 == 0:
        raise InvalidWord(word, "conjugate partial Dyck word of odd length")
    return word, (n_e + n_n - 1) // 2


def path_weight_wprime(word: str, n: Optional[int] = None) -> Tuple[int, ...]:
    """The weighting ``w'`` of the ``E`` steps of a conjugate partial Dyck word.

    The word is placed so that it ends at ``(n + 1, n + 1)``. A full Dyck word is
    accepted too, in which case its fixed first ``E`` is dropped.
    """
    if not (is_conjugate_partial_dyck(word) or is_dyck(word)):
        raise InvalidWord(word, "conjugate partial Dyck word")
    stripped, rank = _strip_fixed_first_e(word)
    if n is not None and n != rank:
        raise InvalidWord(word, f"conjugate partial Dyck word of rank {n}")
    n_e, n_n = stripped.count("E"), stripped.count("N")
    start = (rank + 1 - n_e, rank + 1 - n_n)
    letters = []
    for (x, y), step in zip(coordinates(stripped, start), stripped):
        if step != "E":
            continue
        s = x + y
        letters.append(rank + 1 - s // 2 if s % 2 == 0 else -(rank + 1 - (s + 1) // 2))
    return tuple(letters)


def signed_weight(word: str) -> int:
    """Sum of the ``N``-step letters of ``w`` counted with their sign"""
    points = coordinates(word)
    return sum(letter_at(x + y) for (x, y), step in zip(points, word) if step == "N")


def _wpm(letters: Sequence[int]) -> Tuple[int, int]:
    return sum(a for a in letters if a > 0), sum(-a for a in letters if a < 0)


def _fixed_letters(word: str) -> Tuple[int, ...]:
    """``w`` on a word of ``Dyck_(n,k)``, dropping the fixed last ``N`` when n = k"""
    if is_dyck(word) and word:
        return path_weight_w(word)[:-1]
    return path_weight_w(word)


def descents(word: str) -> Tuple[int, ...]:
    """1-based positions ``i`` with ``D_i = N`` and ``D_(i+1) = E``"""
    return tuple(
        i + 1 for i in range(len(word) - 1) if word[i] == "N" and word[i + 1] == "E"
    )


def maj_N(word: str) -> int:
    return sum(word[:i].count("N") for i in descents(word))


def maj_E(word: str) -> int:
    return sum(word[:i].count("E") for i in descents(word))


def area(word: str) -> int:
    """Full cells between a Dyck path and the diagonal"""
    points = coordinates(word)
    return sum(x - y - 1 for (x, y), step in zip(points, word) if step == "N")


def path_statistics(word: str) -> PathStatistics:
    _require(word, is_partial_dyck, "partial Dyck word")
    w_plus, w_minus = _wpm(_fixed_letters(word))
    return PathStatistics(
        area=area(word),
        des=descents(word),
        maj_N=maj_N(word),
        maj_E=maj_E(word),
        w_plus=w_plus,
        w_minus=w_minus,
        signed_weight=signed_weight(word),
    )


# ---- q,t-Catalan numbers -------------------------------------------------------


def stump_qt_catalan(n: int) -> BiLaurentPoly:
    """``sum q^maj_N(D) t^(C(n,2) - maj_E(D))`` over ``Dyck_n``"""
    b = comb(n, 2)
    terms: dict = {}
    for word in enumerate_dyck(n):
        key = (maj_N(word), b - maj_E(word))
        terms[key] = terms.get(key, 0) + 1
    return BiLaurentPoly(terms)


def _qt_triangle_domain(n: int, k: int):
    if n != k and (n + k) % 2 == 0:
        raise ValueError(
            f"the (q,t)-Catalan triangle needs n + k odd or n = k, got ({n}, {k})"
        )


def wpm_qt_catalan_triangle(n: int, k: int) -> BiLaurentPoly:
    """``sum q^w+(D) t^w-(D)`` over ``Dyck_(n,k)`` (``N``-step form)"""
    _qt_triangle_domain(n, k)
    terms: dict = {}
    for word in enumerate_partial_dyck(n, k):
        key = _wpm(_fixed_letters(word))
        terms[key] = terms.get(key, 0) + 1
    return BiLaurentPoly(terms)


def wpm_qt_catalan(n: int) -> BiLaurentPoly:
    return wpm_qt_catalan_triangle(n, n)


def wprime_qt_catalan_triangle(n: int, k: int) -> BiLaurentPoly:
    """Same generating function computed from ``w'`` on conjugate words"""
    _qt_triangle_domain(n, k)
    terms: dict = {}
    for word in enumerate_partial_dyck(n, k):
        key = _wpm(path_weight_wprime(conjugate_word(word)))
        terms[key] = terms.get(key, 0) + 1
    return BiLaurentPoly(terms)


def upsilon(word: str) -> LatticeWord:
    """Bijection on ``Dyck_n`` turning ``(w+, w-)`` into valley positions.

    The valleys of the image are ``(x_i, y_i)`` with the ``x_i`` the unbarred
    letters of ``w`` and the ``y_i`` the complement in ``[1, n-1]`` of the barred
    ones.
    """
    _require(word, is_dyck, "Dyck word")
    n = word.count("E")
    letters = _fixed_letters(word)
    xs = sorted(a for a in letters if a > 0)
    barred = {-a for a in letters if a < 0}
    ys = sorted(set(range(1, n)) - barred)
    assert len(xs) == len(ys), f"unbalanced valley data for {word}"
    steps, x, y = [], 0, 0
    for xi, yi in zip(xs, ys):
        assert xi >= yi and xi > x and yi > y, f"valley ({xi}, {yi}) invalid for {word}"
        steps.append("E" * (xi - x) + "N" * (yi - y))
        x, y = xi, yi
    steps.append("E" * (n - x) + "N" * (n - y))
    return LatticeWord("".join(steps))


# ---- rectangle statistic -------------------------------------------------------


def rect_step_weight(n: int, m: int, x: int, y: int) -> int:
    """Weight of an ``E`` step at ``(x, y)`` in the ``m x n`` rectangle"""
    d = n + m - x - y
    return -((d - 1) // 2) if d % 2 else d // 2


def rect_weight(word: str, n: int, m: int) -> int:
    points = coordinates(word)
    return sum(
        rect_step_weight(n, m, x, y)
        for (x, y), step in zip(points, word)
        if step == "E"
    )


def rect_valuation(n: int, m: int) -> Tuple[int, int]:
    """``(D_(n,m), v_(n,m))`` with ``v = -(D + (D+1) + ... + (D+m-1))``"""
    d = (n - m + 1) // 2
    return d, -sum(range(d, d + m))


class RectGenerating(NamedTuple):
    polynomial: LaurentPoly
    shift: int
    valuation: int


def rect_generating(n: int, m: int) -> RectGenerating:
    """``sum q^w'(P)`` over all paths with ``n`` steps ``N`` and ``m`` steps ``E``"""
    terms: dict = {}
    for word in enumerate_rectangle(n, m):
        key = rect_weight(word, n, m)
        terms[key] = terms.get(key, 0) + 1
    d, v = rect_valuation(n, m)
    return RectGenerating(LaurentPoly(terms), d, v)


def rect_generating_qt(n: int, m: int) -> BiLaurentPoly:
    """Bivariate refinement: ``q`` tracks positive and ``t`` negative step weights"""
    terms: dict = {}
    for word in enumerate_rectangle(n, m):
        points = coordinates(word)
        weights = [
            rect_step_weight(n, m, x, y)
            for (x, y), step in zip(points, word)
            if step == "E"
        ]
        key = _wpm(weights)
        terms[key] = terms.get(key, 0) + 1
    return BiLaurentPoly(terms)


# ---- area and tunnels ----------------------------------------------------------


@lru_cache(maxsize=None)
def carlitz_riordan(n: int) -> LaurentPoly:
    """``CatCR_n(q)`` from ``CatCR_(n+1) = sum q^k CatCR_k CatCR_(n-k)``"""
    if n == 0:
        return LaurentPoly(1)
    total = LaurentPoly()
    for k in range(n):
        total = total + carlitz_riordan(k) * carlitz_riordan(n - 1 - k) * Q**k
    return total


def area_generating(n: int) -> LaurentPoly:
    terms: dict = {}
    for word in enumerate_dyck(n):
        terms[area(word)] = terms.get(area(word), 0) + 1
    return LaurentPoly(terms)


def tunnel_length(word: str) -> int:
    """Sum of ``j - i`` over matched pairs ``U`` at ``i`` and ``D`` at ``j``"""
    _require(word, is_motzkin, "Motzkin word")
    stack: List[int] = []
    total = 0
    for j, step in enumerate(word):
        if step == "U":
            stack.append(j)
        elif step == "D":
            total += j - stack.pop()
    return total


@lru_cache(maxsize=None)
def cigler_motzkin(n: int) -> LaurentPoly:
    """Cigler's q-Motzkin numbers ``Mot^dagger_n(q)``"""
    if n <= 1:
        return LaurentPoly(1)
    m = n - 1
    total = cigler_motzkin(m)
    for k in range(m):
        total = total + Q ** (k + 1) * cigler_motzkin(k) * cigler_motzkin(m - k - 1)
    return total


def tunnel_generating(n: int) -> LaurentPoly:
    terms: dict = {}
    for word in enumerate_motzkin(n):
        t = tunnel_length(word)
        terms[t] = terms.get(t, 0) + 1
    return LaurentPoly(terms)


# ---- Xi oracle -----------------------------------------------------------------


def xi_three_step(word: str) -> Tuple[int, ...]:
    """Column of ``Xi`` on a Dyck word via complement partition and staircase.

    Used as an independent oracle for the weighting-based construction.
    """
    _require(word, is_dyck, "Dyck word")
    n = word.count("E")
    rank = n - 1
    points = coordinates(word)
    row_x = [x for (x, _), step in zip(points, word) if step == "N"]
    complement = [n - x for x in row_x[:rank]]
    values = [c + (rank - y) for y, c in enumerate(complement)]
    column = []
    for v in values:
        column.append(-(rank - (v - 1) // 2) if v % 2 else rank - v // 2 + 1)
    return tuple(column)
