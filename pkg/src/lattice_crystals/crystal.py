"""
Crystals of types ``A_n``, ``B_n``, ``C_n`` and ``D_n`` built as tensor products of
the vector representation ``B(omega_1)`` and the spin representations.

Conventions:

- Weights use doubled ``epsilon`` coordinates (see :obj:`~.types.Weight`).
- A :class:`TensorElement` stores its factors in written order, ``b_L (x) ... (x)
  b_1``; the signature rule scans them left to right, each factor contributing
  ``-`` repeated ``phi_i`` times then ``+`` repeated ``epsilon_i`` times.
- The annihilated result of ``e_i``/``f_i`` is ``None``.
- A tableau is read column by column from left to right, each column from bottom
  to top (reverse Far-Eastern reading).

>>> b = kn_highest_weight(CartanSpec("C", 2), (2, 2))
>>> len(closure(b))
5
"""
import logging
from collections import Counter, deque
from itertools import combinations, product
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from . import limits
from .errors import InvalidFamily, InvalidWeight, ResourceCapExceeded
from .types import Column, SignedLetter, Weight

_logger = logging.getLogger(__name__)

FAMILIES = ("A", "B", "C", "D")


class CartanSpec(NamedTuple):
    family: str
    rank: int

    def validate(self) -> "CartanSpec":
        if self.family not in FAMILIES or self.rank < (2 if self.family == "D" else 1):
            raise InvalidFamily(self.family, self.rank, "crystal construction")
        return self

    def __str__(self):
        return f"{self.family}_{self.rank}"

    @property
    def index_set(self) -> range:
        return range(1, self.rank + 1)

    @property
    def dimension(self) -> int:
        """Number of ``epsilon`` coordinates"""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.dimension

    def simple_root(self, i: int) -> Weight:
        root = [0] * self.dimension
        if self.family == "A" or i < self.rank:
            root[i - 1], root[i] = 2, -2
        elif self.family == "B":
            root[-1] = 2
        elif self.family == "C":
            root[-1] = 4
        else:
            root[-2], root[-1] = 2, 2
        return tuple(root)

    def pairing(self, weight: Weight, i: int) -> int:
        """``<alpha_i^vee, weight>`` for a weight in doubled coordinates"""
        if self.family == "A" or i < self.rank:
            return (weight[i - 1] - weight[i]) // 2
        if self.family == "B":
            return weight[-1]
        if self.family == "C":
            return weight[-1] // 2
        return (weight[-2] + weight[-1]) // 2

    def fundamental_weight(self, i: int) -> Weight:
        n, fam = self.rank, self.family
        if i == 0:
            return self.zero
        if fam == "B" and i == n:
            return (1,) * n
        if fam == "D" and i >= n - 1:
            return (1,) * (n - 1) + ((1,) if i == n else (-1,))
        return (2,) * i + (0,) * (self.dimension - i)

    def tfw(self, i: int) -> Weight:
        """The weight whose KN tableau is a single column of height ``i``"""
        n, fam = self.rank, self.family
        if fam == "B" and i == n:
            return add_weights(self.fundamental_weight(n), self.fundamental_weight(n))
        if fam == "D" and i == n - 1:
            return add_weights(
                self.fundamental_weight(n - 1), self.fundamental_weight(n)
            )
        if fam == "D" and i == n:
            return add_weights(self.fundamental_weight(n), self.fundamental_weight(n))
        return self.fundamental_weight(i)

    def weight_from_fundamental(self, coefficients: Sequence[int]) -> Weight:
        if len(coefficients) != self.rank or any(c < 0 for c in coefficients):
            raise InvalidWeight(
                tuple(coefficients),
                self.family,
                self.rank,
                f"expected {self.rank} non-negative fundamental coefficients",
            )
        total = self.zero
        for i, c in enumerate(coefficients, 1):
            total = add_weights(total, scale_weight(self.fundamental_weight(i), c))
        return total

    def fundamental_coefficients(self, weight: Weight) -> Tuple[int, ...]:
        return tuple(self.pairing(weight, i) for i in self.index_set)

    def is_integral(self, weight: Weight) -> bool:
        """Whether ``weight`` lies in the weight lattice"""
        if len(weight) != self.dimension:
            return False
        if self.family in "BD":
            return len(set(x % 2 for x in weight)) <= 1
        return all(x % 2 == 0 for x in weight)

    def is_dominant(self, weight: Weight) -> bool:
        return all(c >= 0 for c in self.fundamental_coefficients(weight))


def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def scale_weight(a: Weight, k: int) -> Weight:
    return tuple(k * x for x in a)


# ---- atoms ---------------------------------------------------------------------


class SpinVector(tuple):
    """Element of a spin crystal: a tuple of signs ``+1``/``-1``"""

    @classmethod
    def parse(cls, text: str) -> "SpinVector":
        return cls(+1 if c == "+" else -1 for c in text)

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self)

    def __repr__(self):
        return f"SpinVector('{self}')"


Atom = Union[SignedLetter, SpinVector]


def _letter_f(cartan: CartanSpec, i: int, x: int) -> Optional[int]:
    n, fam = cartan.rank, cartan.family
    if fam == "A" or i < n:
        if x == i:
            return i + 1
        if x == -(i + 1) and fam != "A":
            return -i
        return None
    if fam == "B":
        return {n: 0, 0: -n}.get(x)
    if fam == "C":
        return -n if x == n else None
    return {n - 1: -n, n: -(n - 1)}.get(x)


def _letter_e(cartan: CartanSpec, i: int, x: int) -> Optional[int]:
    n, fam = cartan.rank, cartan.family
    if fam == "A" or i < n:
        if x == i + 1:
            return i
        if x == -i and fam != "A":
            return -(i + 1)
        return None
    if fam == "B":
        return {0: n, -n: 0}.get(x)
    if fam == "C":
        return n if x == -n else None
    return {-n: n - 1, -(n - 1): n}.get(x)


def _spin_f(cartan: CartanSpec, i: int, s: SpinVector) -> Optional[SpinVector]:
    n, signs = cartan.rank, list(s)
    if i < n:
        if (signs[i - 1], signs[i]) != (1, -1):
            return None
        signs[i - 1], signs[i] = -1, 1
    elif cartan.family == "B":
        if signs[-1] != 1:
            return None
        signs[-1] = -1
    else:
        if (signs[-2], signs[-1]) != (1, 1):
            return None
        signs[-2], signs[-1] = -1, -1
    return SpinVector(signs)


def _spin_e(cartan: CartanSpec, i: int, s: SpinVector) -> Optional[SpinVector]:
    n, signs = cartan.rank, list(s)
    if i < n:
        if (signs[i - 1], signs[i]) != (-1, 1):
            return None
        signs[i - 1], signs[i] = 1, -1
    elif cartan.family == "B":
        if signs[-1] != -1:
            return None
        signs[-1] = 1
    else:
        if (signs[-2], signs[-1]) != (-1, -1):
            return None
        signs[-2], signs[-1] = 1, 1
    return SpinVector(signs)


def atom_f(cartan: CartanSpec, i: int, atom: Atom) -> Optional[Atom]:
    if isinstance(atom, SpinVector):
        return _spin_f(cartan, i, atom)
    return _letter_f(cartan, i, atom)


def atom_e(cartan: CartanSpec, i: int, atom: Atom) -> Optional[Atom]:
    if isinstance(atom, SpinVector):
        return _spin_e(cartan, i, atom)
    return _letter_e(cartan, i, atom)


def _string_length(step: Callable, cartan: CartanSpec, i: int, atom: Atom) -> int:
    k = 0
    current = step(cartan, i, atom)
    while current is not None:
        k += 1
        current = step(cartan, i, current)
    return k


def atom_weight(cartan: CartanSpec, atom: Atom) -> Weight:
    if isinstance(atom, SpinVector):
        return tuple(atom)
    weight = [0] * cartan.dimension
    if atom > 0:
        weight[atom - 1] = 2
    elif atom < 0:
        weight[-atom - 1] = -2
    return tuple(weight)


def validate_atom(cartan: CartanSpec, atom: Atom) -> Atom:
    n, fam = cartan.rank, cartan.family
    if isinstance(atom, SpinVector):
        ok = fam in "BD" and len(atom) == n and all(s in (1, -1) for s in atom)
    elif fam == "A":
        ok = 1 <= atom <= n + 1
    else:
        ok = 1 <= abs(atom) <= n or (atom == 0 and fam == "B")
    if not ok:
        reason = "not an element of the vector or spin crystal"
        raise InvalidWeight(atom, fam, n, reason)
    return atom


# ---- tensor products -----------------------------------------------------------


def _atom_key(atom: Atom) -> Tuple[int, int, str]:
    if isinstance(atom, SpinVector):
        return (1, 0, str(atom))
    return (0, atom, "")


class TensorElement(NamedTuple):
    """``atoms[0] (x) atoms[1] (x) ... (x) atoms[-1]`` in the written order"""

    cartan: CartanSpec
    atoms: Tuple[Atom, ...]

    @property
    def weight(self) -> Weight:
        total = self.cartan.zero
        for atom in self.atoms:
            total = add_weights(total, atom_weight(self.cartan, atom))
        return total

    def signature(self, i: int) -> List[Tuple[str, int]]:
        """Reduced signature ``-...-+...+`` as ``(sign, factor position)`` pairs"""
        reduced: List[Tuple[str, int]] = []
        for pos, atom in enumerate(self.atoms):
            minus = _string_length(atom_f, self.cartan, i, atom)
            plus = _string_length(atom_e, self.cartan, i, atom)
            for sign in "-" * minus + "+" * plus:
                if sign == "-" and reduced and reduced[-1][0] == "+":
                    reduced.pop()
                else:
                    reduced.append((sign, pos))
        return reduced

    def epsilon(self, i: int) -> int:
        return sum(1 for sign, _ in self.signature(i) if sign == "+")

    def phi(self, i: int) -> int:
        return sum(1 for sign, _ in self.signature(i) if sign == "-")

    def _act(self, pos: int, new: Optional[Atom]) -> Optional["TensorElement"]:
        if new is None:
            return None
        atoms = self.atoms[:pos] + (new,) + self.atoms[pos + 1 :]
        return TensorElement(self.cartan, atoms)

    def e(self, i: int) -> Optional["TensorElement"]:
        plus = [pos for sign, pos in self.signature(i) if sign == "+"]
        if not plus:
            return None
        pos = plus[0]
        return self._act(pos, atom_e(self.cartan, i, self.atoms[pos]))

    def f(self, i: int) -> Optional["TensorElement"]:
        minus = [pos for sign, pos in self.signature(i) if sign == "-"]
        if not minus:
            return None
        pos = minus[-1]
        return self._act(pos, atom_f(self.cartan, i, self.atoms[pos]))

    def is_highest_weight(self) -> bool:
        return all(self.e(i) is None for i in self.cartan.index_set)

    def sort_key(self):
        return tuple(_atom_key(a) for a in self.atoms)

    def tensor(self, other: "TensorElement") -> "TensorElement":
        """``self (x) other``"""
        return TensorElement(self.cartan, self.atoms + other.atoms)

    def __str__(self):
        return " (x) ".join(str(a) for a in self.atoms) or "()"


def element(cartan: CartanSpec, atoms: Iterable[Atom]) -> TensorElement:
    cartan.validate()
    return TensorElement(cartan, tuple(validate_atom(cartan, a) for a in atoms))


def apply(op: str, i: int, b: TensorElement) -> Optional[TensorElement]:
    """Kashiwara operator ``e_i`` or ``f_i``; ``None`` stands for 0"""
    if i not in b.cartan.index_set:
        raise ValueError(f"{i} is not in the index set of {b.cartan}")
    if op == "e":
        return b.e(i)
    if op == "f":
        return b.f(i)
    raise ValueError(f"unknown operator {op!r}, expected 'e' or 'f'")


def is_highest_weight(b: TensorElement) -> bool:
    return b.is_highest_weight()


def apply_word(b: Optional[TensorElement], word: Iterable[Tuple[str, int]]):
    for op, i in word:
        if b is None:
            return None
        b = apply(op, i, b)
    return b


def path_to_highest_weight(b: TensorElement) -> Tuple[TensorElement, List[int]]:
    """Raise ``b`` greedily (smallest applicable ``i`` first); return the highest
    weight element and the indices used, in order"""
    used = []
    while True:
        for i in b.cartan.index_set:
            raised = b.e(i)
            if raised is not None:
                used.append(i)
                b = raised
                break
        else:
            return b, used


def virtual_apply(
    op: str, i: int, b: TensorElement, gamma: int = 2
) -> Optional[TensorElement]:
    """Virtual operators of ``C_n`` inside ``B_n``: ``e_n`` and ``f_n`` act as
    their ``gamma``-th powers, the other indices act unchanged"""
    if b.cartan.family != "B":
        raise InvalidFamily(b.cartan.family, b.cartan.rank, "virtualization")
    power = gamma if i == b.cartan.rank else 1
    result: Optional[TensorElement] = b
    for _ in range(power):
        if result is None:
            return None
        result = apply(op, i, result)
    return result


# ---- crystals ------------------------------------------------------------------


class Crystal:
    """Finite set of tensor elements closed under the Kashiwara operators"""

    def __init__(self, cartan: CartanSpec, elements: Iterable[TensorElement]):
        self.cartan = cartan
        self.elements: Tuple[TensorElement, ...] = tuple(
            sorted(set(elements), key=TensorElement.sort_key)
        )
        self._members: Optional[frozenset] = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[TensorElement]:
        return iter(self.elements)

    def __contains__(self, b):
        if self._members is None:
            self._members = frozenset(self.elements)
        return b in self._members

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def highest_weight_elements(self) -> List[TensorElement]:
        return [b for b in self.elements if b.is_highest_weight()]

    def character(self) -> Counter:
        return Counter(b.weight for b in self.elements)

    @property
    def weights(self) -> List[Weight]:
        return sorted(set(b.weight for b in self.elements), reverse=True)

    def components(self) -> List["CrystalComponent"]:
        return [closure(b) for b in self.highest_weight_elements()]


class CrystalComponent(Crystal):
    """A connected crystal, i.e. the closure of one element"""

    @property
    def highest_weight(self) -> TensorElement:
        (top,) = self.highest_weight_elements()
        return top

    @property
    def highest_weight_vector(self) -> Weight:
        return self.highest_weight.weight


def closure(b: TensorElement) -> CrystalComponent:
    """Breadth-first orbit of ``b`` under every ``e_i`` and ``f_i``"""
    cap = limits.active().cap
    seen = {b}
    queue = deque([b])
    while queue:
        current = queue.popleft()
        for i in current.cartan.index_set:
            for new in (current.e(i), current.f(i)):
                if new is not None and new not in seen:
                    seen.add(new)
                    queue.append(new)
                    if len(seen) > cap:
                        raise ResourceCapExceeded(f"the crystal of {b}", len(seen), cap)
    _logger.debug(f"Closure of {b} in {b.cartan} has {len(seen)} elements")
    return CrystalComponent(b.cartan, seen)


def character(crystal: Crystal) -> Dict[Weight, int]:
    return dict(crystal.character())


def tensor_product(*factors: Crystal) -> Iterator[TensorElement]:
    """Lazy iteration over ``factors[0] (x) factors[1] (x) ...``"""
    cartan = factors[0].cartan
    for parts in product(*(f.elements for f in factors)):
        atoms: Tuple[Atom, ...] = ()
        for part in parts:
            atoms += part.atoms
        yield TensorElement(cartan, atoms)


def tensor_power(crystal: Crystal, k: int) -> Iterator[TensorElement]:
    if k == 0:
        yield TensorElement(crystal.cartan, ())
        return
    yield from tensor_product(*([crystal] * k))


def decompose_tensor(factors: Sequence[Crystal]) -> Counter:
    """Highest weights (with multiplicity) of ``factors[0] (x) ... (x) factors[-1]``.

    ``b (x) p`` is highest weight iff ``p`` is and ``epsilon_i(b) <= <alpha_i^vee,
    wt(p)>`` for all ``i``; the factors are absorbed right to left keeping only the
    multiset of highest weights reached so far.
    """
    if not factors:
        raise ValueError("expected at least one factor")
    cartan = factors[0].cartan
    index_set = list(cartan.index_set)
    states: Counter = Counter({cartan.zero: 1})
    work = 0
    for factor in reversed(factors):
        data = [
            (tuple(b.epsilon(i) for i in index_set), b.weight) for b in factor.elements
        ]
        work += len(states) * len(data)
        limits.check(work, "highest weight elements of a tensor product")
        new: Counter = Counter()
        for weight, count in states.items():
            pairing = [cartan.pairing(weight, i) for i in index_set]
            for eps, wt in data:
                if all(e <= p for e, p in zip(eps, pairing)):
                    new[add_weights(weight, wt)] += count
        states = new
    return states


def tensor_multiplicity(factors: Sequence[Crystal], weight: Weight) -> int:
    return decompose_tensor(factors)[tuple(weight)]


# ---- Kashiwara-Nakashima tableaux -----------------------------------------------


def _column_word(column: Column) -> Tuple[SignedLetter, ...]:
    return tuple(reversed(column))


def kn_columns(
    cartan: CartanSpec, weight: Weight
) -> Tuple[Optional[SpinVector], List[Column]]:
    """Highest weight KN tableau of a dominant weight: the optional spin column and
    the letter columns (top to bottom), tallest first."""
    cartan.validate()
    if not (cartan.is_integral(weight) and cartan.is_dominant(weight)):
        raise InvalidWeight(weight, cartan.family, cartan.rank, "not a dominant weight")
    n, fam = cartan.rank, cartan.family
    coeffs = list(cartan.fundamental_coefficients(weight))
    spin: Optional[SpinVector] = None
    columns: List[Column] = []
    if fam == "B":
        pairs, odd = divmod(coeffs[-1], 2)
        if odd:
            spin = SpinVector((1,) * n)
        columns += [tuple(range(1, n + 1))] * pairs
        coeffs[-1] = 0
    elif fam == "D":
        a, b = coeffs[-2], coeffs[-1]
        columns += [tuple(range(1, n))] * min(a, b)
        pairs, odd = divmod(abs(a - b), 2)
        if b > a:
            columns += [tuple(range(1, n + 1))] * pairs
            if odd:
                spin = SpinVector((1,) * n)
        else:
            columns += [tuple(range(1, n)) + (-n,)] * pairs
            if odd:
                spin = SpinVector((1,) * (n - 1) + (-1,))
        coeffs[-2:] = [0, 0]
    for height in range(len(coeffs), 0, -1):
        columns += [tuple(range(1, height + 1))] * coeffs[height - 1]
    columns.sort(key=len, reverse=True)
    return spin, columns


def kn_highest_weight(cartan: CartanSpec, weight: Weight) -> TensorElement:
    """``u_lambda`` as the reading word of the highest weight KN tableau"""
    spin, columns = kn_columns(cartan, weight)
    atoms: List[Atom] = [spin] if spin is not None else []
    for column in columns:
        atoms.extend(_column_word(column))
    return TensorElement(cartan, tuple(atoms))


def highest_weight_crystal(cartan: CartanSpec, weight: Weight) -> CrystalComponent:
    """``B(lambda)`` realized on KN reading words"""
    return closure(kn_highest_weight(cartan, weight))


def vector_crystal(cartan: CartanSpec) -> CrystalComponent:
    return highest_weight_crystal(cartan, cartan.fundamental_weight(1))


def spin_crystal(cartan: CartanSpec, minus: bool = False) -> CrystalComponent:
    """``B(omega_n)`` (or ``B(omega_(n-1))`` in type ``D`` with ``minus=True``)"""
    if cartan.family not in "BD":
        raise InvalidFamily(cartan.family, cartan.rank, "spin representations")
    index = cartan.rank - 1 if minus else cartan.rank
    return highest_weight_crystal(cartan, cartan.fundamental_weight(index))


def reading_word(columns: Sequence[Column], spin: Optional[SpinVector] = None):
    atoms: List[Atom] = [spin] if spin is not None else []
    for column in columns:
        atoms.extend(_column_word(column))
    return tuple(atoms)


def columns_from_word(
    word: Sequence[SignedLetter], shape: Sequence[int]
) -> List[Column]:
    """Split a reading word into columns of the given heights (top to bottom)"""
    columns, pos = [], 0
    for height in shape:
        columns.append(tuple(reversed(word[pos : pos + height])))
        pos += height
    if pos != len(word):
        raise ValueError(f"a word of length {len(word)} does not fill {tuple(shape)}")
    return columns


# ---- exterior powers of the vector representation in type C ---------------------


def kn_order(n: int) -> List[SignedLetter]:
    """``1 < 2 < ... < n < nbar < ... < 1bar``"""
    return list(range(1, n + 1)) + list(range(-n, 0))


def is_kn_column(n: int, column: Column) -> bool:
    """Type ``C_n`` KN column: strictly increasing, and whenever ``i`` sits in row
    ``p`` and ``ibar`` in row ``q`` then ``p + (N - q + 1) <= i``"""
    order = {x: k for k, x in enumerate(kn_order(n))}
    if any(x not in order for x in column):
        return False
    if any(order[a] >= order[b] for a, b in zip(column, column[1:])):
        return False
    rows = {x: p for p, x in enumerate(column, 1)}
    height = len(column)
    return all(
        rows[i] + (height - rows[-i] + 1) <= i
        for i in range(1, n + 1)
        if i in rows and -i in rows
    )


def wedge_columns(n: int, k: int) -> List[Column]:
    """Height ``k`` columns with distinct letters, increasing in the KN order"""
    return [tuple(c) for c in combinations(kn_order(n), k)]


def wedge_column_crystal(n: int) -> Crystal:
    """``(+)_k Lambda^k B(omega_1)`` of type ``C_n`` on strictly increasing columns"""
    cartan = CartanSpec("C", n)
    elements = [
        TensorElement(cartan, _column_word(column))
        for k in range(2 * n + 1)
        for column in wedge_columns(n, k)
    ]
    return Crystal(cartan, elements)


def wedge_pair_removal(column: Column) -> Column:
    """Drop the pairs ``(i, ibar)`` at which the excess
    ``#{x in column : |x| <= i} - i`` reaches a new positive maximum"""
    letters = set(column)
    dropped: Set[SignedLetter] = set()
    excess = peak = 0
    for i in range(1, max((abs(x) for x in column), default=0) + 1):
        excess += (i in letters) + (-i in letters) - 1
        if excess > peak:
            peak = excess
            dropped.update((i, -i))
    return tuple(x for x in column if x not in dropped)


def wedge_to_kn(n: int, column: Column) -> Column:
    """Image of a wedge column in the KN crystal, transported along the path to
    the highest weight element of its component"""
    cartan = CartanSpec("C", n)
    top, used = path_to_highest_weight(TensorElement(cartan, _column_word(column)))
    target: Optional[TensorElement] = kn_highest_weight(cartan, top.weight)
    for i in reversed(used):
        target = target.f(i) if target is not None else None
    assert target is not None, f"transport of {column} left the crystal"
    return tuple(reversed(target.atoms))


def wedge_admissible(n: int, column: Column) -> bool:
    """Whether the pair-removal rule agrees with the crystal transport on
    ``column``"""
    removed = wedge_pair_removal(column)
    return is_kn_column(n, removed) and removed == wedge_to_kn(n, column)


def wedge_removal_mismatches(n: int) -> List[Column]:
    """Wedge columns of type ``C_n`` on which :func:`wedge_admissible` fails"""
    return [
        column
        for k in range(2 * n + 1)
        for column in wedge_columns(n, k)
        if not wedge_admissible(n, column)
    ]
