"""
King tableaux of type ``C_n`` and their bijections with (partial) Dyck paths and
with families of non-intersecting lattice paths.

The King alphabet is ``1 < 1bar < 2 < 2bar < ... < n < nbar``; a letter is stored
as :class:`KingLetter` and converted explicitly from/to the signed-integer letters
(``-k`` for ``kbar``) used everywhere else.

>>> xi("EENENNEENN")
(-1, -2, 3, -4)
>>> xi_prime("EENENNEENN")
(-1, 2, -3, -4)
"""
import logging
from collections import Counter
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import limits
from .errors import IntersectingFamily, InvalidWeight, InvalidWord, ResourceCapExceeded
from .lgvdet import PathFamily, WeightedDAG, catalan_graph, lgv_enumerate
from .paths import (
    coordinates,
    is_conjugate_partial_dyck,
    is_dyck,
    is_partial_dyck,
    letter_at,
    path_weight_w,
    path_weight_wprime,
)
from .types import Column, Partition, SignedLetter, Weight

_logger = logging.getLogger(__name__)


class KingLetter(NamedTuple):
    value: int
    barred: bool = False

    @classmethod
    def from_signed(cls, letter: SignedLetter) -> "KingLetter":
        if letter == 0:
            raise ValueError("0 is not a letter of the King alphabet")
        return cls(abs(letter), letter < 0)

    @property
    def signed(self) -> SignedLetter:
        return -self.value if self.barred else self.value

    @property
    def key(self) -> int:
        """Position in the King order"""
        return 2 * self.value + int(self.barred)

    def __str__(self):
        return f"{self.value}bar" if self.barred else str(self.value)


class KingTableau:
    """Semistandard tableau in the King order with every entry of row ``k`` at
    least ``k``"""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[KingLetter]]):
        self.rows: Tuple[Tuple[KingLetter, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def from_signed_rows(cls, rows: Sequence[Sequence[SignedLetter]]) -> "KingTableau":
        return cls([[KingLetter.from_signed(x) for x in row] for row in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[Column]) -> "KingTableau":
        """Build from columns (signed letters, top to bottom), left to right"""
        height = max((len(c) for c in columns), default=0)
        rows = [
            [KingLetter.from_signed(c[r]) for c in columns if len(c) > r]
            for r in range(height)
        ]
        return cls(rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def columns(self) -> List[Column]:
        width = len(self.rows[0]) if self.rows else 0
        return [
            tuple(row[c].signed for row in self.rows if len(row) > c)
            for c in range(width)
        ]

    def signed_rows(self) -> List[List[SignedLetter]]:
        return [[x.signed for x in row] for row in self.rows]

    def weight(self, n: int) -> Weight:
        """Weight in doubled coordinates: ``k`` adds ``epsilon_k``, ``kbar``
        subtracts it"""
        weight = [0] * n
        for row in self.rows:
            for x in row:
                weight[x.value - 1] += -2 if x.barred else 2
        return tuple(weight)

    def is_valid(self, n: int) -> bool:
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])) or 0 in shape:
            return False
        for r, row in enumerate(self.rows, 1):
            for c, x in enumerate(row):
                if not 1 <= x.value <= n or x.key < 2 * r:
                    return False
                if c and row[c - 1].key > x.key:
                    return False
                if r > 1 and self.rows[r - 2][c].key >= x.key:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, KingTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return " / ".join(" ".join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"KingTableau({self.signed_rows()!r})"


# ---- enumeration ---------------------------------------------------------------


def _validate_partition(shape: Sequence[int], n: int) -> Partition:
    shape = tuple(p for p in shape if p)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p < 0 for p in shape):
        raise InvalidWeight(shape, "C", n, "not a partition")
    if len(shape) > n:
        raise InvalidWeight(shape, "C", n, f"more than {n} rows")
    return shape


def iterate_king(shape: Sequence[int], n: int) -> Iterator[KingTableau]:
    """Lazily fill the cells in row-major order"""
    shape = _validate_partition(shape, n)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    alphabet = [KingLetter(v, b) for v in range(1, n + 1) for b in (False, True)]
    grid: List[List[Optional[KingLetter]]] = [[None] * length for length in shape]

    def fill(k: int) -> Iterator[KingTableau]:
        if k == len(cells):
            yield KingTableau(grid)
            return
        r, c = cells[k]
        low = 2 * (r + 1)
        if c:
            low = max(low, grid[r][c - 1].key)  # type: ignore[union-attr]
        if r:
            low = max(low, grid[r - 1][c].key + 1)  # type: ignore[union-attr]
        for letter in alphabet:
            if letter.key >= low:
                grid[r][c] = letter
                yield from fill(k + 1)
        grid[r][c] = None

    return fill(0)


def enumerate_king(shape: Sequence[int], n: int) -> List[KingTableau]:
    """All King tableaux of the given shape for type ``C_n``"""
    cap = limits.active().cap
    result = []
    for tableau in iterate_king(shape, n):
        result.append(tableau)
        if len(result) > cap:
            raise ResourceCapExceeded(f"K({tuple(shape)}) in C_{n}", len(result), cap)
    _logger.debug(f"|K({tuple(shape)})| = {len(result)} in C_{n}")
    return result


def king_character(shape: Sequence[int], n: int) -> Counter:
    return Counter(t.weight(n) for t in iterate_king(shape, n))


def partition_from_fundamental(coefficients: Sequence[int]) -> Partition:
    """``sum c_i omega_i`` (type ``C``) as the partition with ``c_i`` columns of
    height ``i``"""
    parts = []
    for row in range(1, len(coefficients) + 1):
        parts.append(sum(coefficients[row - 1 :]))
    return tuple(p for p in parts if p)


def conjugate_partition(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


# ---- Dyck paths and columns ------------------------------------------------------


def xi(word: str) -> Column:
    """King column ``(w(N^(1); D), ..., w(N^(i); D))`` of a word in
    ``Dyck_(2n-i+1, i)``.

    A full Dyck word is accepted as well; its fixed last ``N`` is dropped.
    """
    if not is_partial_dyck(word):
        raise InvalidWord(word, "partial Dyck word")
    if is_dyck(word) and word:
        word = word[:-1]
    if (word.count("E") + word.count("N")) % 2 == 0:
        raise InvalidWord(word, "partial Dyck word with 2n - i + 1 letters E")
    return path_weight_w(word)


def xi_prime(word: str) -> Column:
    """King column ``(w'(E^(i); D'), ..., w'(E^(1); D'))`` of a word in
    ``Dyck'_(i, 2n-i+1)``"""
    return tuple(reversed(path_weight_wprime(word)))


def xi_inverse(column: Column, n: int) -> str:
    """The word of ``Dyck_(2n-i+1, i)`` sent to ``column`` by :func:`xi`"""
    i = len(column)
    length = 2 * n + 1
    steps, x, y = [], 0, 0
    for letter in column:
        # the N step sits on the unique anti-diagonal carrying this letter
        s = 2 * letter - 1 if letter > 0 else -2 * letter
        if s - y < x or s - y - x < 0:
            raise InvalidWord(str(column), f"King column for C_{n}")
        steps.append("E" * (s - y - x) + "N")
        x, y = s - y, y + 1
    steps.append("E" * (length - i - x))
    word = "".join(steps)
    if word.count("E") != length - i or not is_partial_dyck(word):
        raise InvalidWord(str(column), f"King column for C_{n}")
    return word


def xi_prime_inverse(column: Column, n: int) -> str:
    """The word of ``Dyck'_(i, 2n-i+1)`` sent to ``column`` by :func:`xi_prime`"""
    i = len(column)
    total = 2 * n + 1
    letters = list(reversed(column))
    # E steps placed so that the word ends at (n + 1, n + 1)
    start = (n + 1 - i, n + 1 - (total - i))
    positions = []
    for letter in letters:
        s = 2 * (n + 1 - letter) if letter > 0 else 2 * (n + 1 + letter) - 1
        positions.append(s)
    steps, x, y = [], start[0], start[1]
    for s in positions:
        target_y = s - x
        if target_y < y:
            raise InvalidWord(str(column), f"King column for C_{n}")
        steps.append("N" * (target_y - y) + "E")
        x, y = x + 1, target_y
    steps.append("N" * (n + 1 - y))
    word = "".join(steps)
    if not is_conjugate_partial_dyck(word) or word.count("N") != total - i:
        raise InvalidWord(str(column), f"King column for C_{n}")
    return word


# ---- non-intersecting families ---------------------------------------------------


class JacobiTrudiLayout(NamedTuple):
    """Sources ``s_i = (i, i)`` and sinks ``t_j`` on the Catalan graph"""

    shape: Partition
    rank: int
    sources: Tuple[Tuple[int, int], ...]
    sinks: Tuple[Tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.sources)

    def entry_size(self, i: int, j: int) -> Tuple[int, int]:
        """``(a(i, j), b(i, j))`` for 1-based ``i, j``"""
        (sx, sy), (tx, ty) = self.sources[i - 1], self.sinks[j - 1]
        return tx - sx, ty - sy

    def path_rank(self, i: int) -> int:
        """Rank ``m = l + n - i`` of the type ``C`` character on row ``i``"""
        return self.length + self.rank - i

    def graph(self) -> WeightedDAG:
        width = max(x for x, _ in self.sinks)
        height = max(y for _, y in self.sinks)
        return catalan_graph(width, height)


def jacobi_trudi_layout(shape: Sequence[int], n: int) -> JacobiTrudiLayout:
    shape = _validate_partition(shape, n)
    heights = conjugate_partition(shape)
    ell = len(heights)
    sources = tuple((i, i) for i in range(1, ell + 1))
    sinks = tuple(
        (2 * ell - j + 2 * n + 1 - heights[ell - j], j + heights[ell - j])
        for j in range(1, ell + 1)
    )
    return JacobiTrudiLayout(shape, n, sources, sinks)


def cyclic_reweight(letter: SignedLetter, shift: int, m: int) -> SignedLetter:
    """``k -> k - shift (mod m)`` written in ``{1, ..., m}``, bars kept"""
    value = (abs(letter) - shift - 1) % m + 1
    return -value if letter < 0 else value


def path_letters(word: str, start: Tuple[int, int], shift: int, m: int) -> Column:
    """Reweighted letters of the ``N`` steps of a path from ``start``"""
    points = coordinates(word, start)
    sx, sy = start
    return tuple(
        cyclic_reweight(letter_at(x + y - sx - sy), shift, m)
        for (x, y), step in zip(points, word)
        if step == "N"
    )


def nilp_families(shape: Sequence[int], n: int) -> List[PathFamily]:
    """Every non-intersecting family of the layout; only ``sigma = id`` occurs"""
    layout = jacobi_trudi_layout(shape, n)
    return lgv_enumerate(
        layout.graph(), layout.sources, layout.sinks, identity_only=True
    )


def nilp_to_king(family: PathFamily, shape: Sequence[int], n: int) -> KingTableau:
    """King tableau whose column ``l + 1 - i`` is read off ``P^(i)``"""
    if not family.is_non_intersecting():
        raise IntersectingFamily(family.paths, "paths share a vertex")
    if not family.is_identity:
        raise IntersectingFamily(family.permutation, "only sigma = id may contribute")
    layout = jacobi_trudi_layout(shape, n)
    ell = layout.length
    columns: List[Column] = [()] * ell
    for i, (path, word) in enumerate(zip(family.paths, family.words()), 1):
        if path[0] != layout.sources[i - 1] or path[-1] != layout.sinks[i - 1]:
            raise IntersectingFamily(family.paths, "paths do not match the layout")
        column = path_letters(word, path[0], ell - i, layout.path_rank(i))
        if any(abs(x) > n for x in column):
            raise IntersectingFamily(family.paths, f"letter outside C_{n}")
        columns[ell - i] = column
    tableau = KingTableau.from_columns(columns)
    if not tableau.is_valid(n):
        raise IntersectingFamily(family.paths, f"{tableau} is not a King tableau")
    return tableau


def family_from_words(
    shape: Sequence[int], n: int, words: Sequence[str]
) -> PathFamily:
    """Identity family of the layout given the step word of every ``P^(i)``"""
    layout = jacobi_trudi_layout(shape, n)
    paths = []
    for source, word in zip(layout.sources, words):
        paths.append(tuple(coordinates(word, source)))
    return PathFamily(tuple(paths), tuple(range(len(paths))), 1, 1)


