"""
Rigid tableaux.

Strict partitions with parts at most ``n`` model the spin crystal ``B(omega_n)`` of
type ``B_n`` (a part ``k`` marks a ``-`` in position ``n+1-k``), and coloured
alternating strict partitions model the two spin crystals of type ``D_(n+1)``.
A sequence ``(tau_1, ..., tau_m)`` stands for the tensor product
``tau_m (x) ... (x) tau_1``: ``tau_1`` is the rightmost factor.

Drawing the sequence as a skew tableau, row ``i`` holds the parts of ``tau_i`` and
is shifted to the right just enough for the columns to weakly decrease; the shifts
make up the inner shape.

>>> ssrt_shape(RigidTableau.of([[5, 4, 3], [5, 4], [5, 4, 3, 2], [5, 4, 3, 2, 1]]))
((6, 5, 5, 5), (3, 3, 1))
"""
import logging
import operator
from collections import deque
from enum import Enum
from itertools import combinations, product
from typing import (
    Callable,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from . import limits
from .crystal import (
    CartanSpec,
    Crystal,
    CrystalComponent,
    SpinVector,
    TensorElement,
    closure,
)
from .errors import InvalidWeight
from .types import Partition

_logger = logging.getLogger(__name__)

WHITE, GRAY = 0, 1


def _strip(parts: Iterable[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _check_rank(n: int, family: str = "B") -> int:
    if n < 1:
        raise InvalidWeight(n, family, n, "the rank must be positive")
    return n


# ---- strict partitions ---------------------------------------------------------


class StrictPartition(tuple):
    """Strictly decreasing positive parts"""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p <= 0 for p in parts) or any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts!r} is not a strict partition")
        return super().__new__(cls, parts)

    @classmethod
    def from_set(cls, values: Iterable[int]) -> "StrictPartition":
        return cls(sorted(set(values), reverse=True))

    @classmethod
    def from_spin(cls, spin: SpinVector) -> "StrictPartition":
        n = len(spin)
        return cls.from_set(n + 1 - p for p, s in enumerate(spin, 1) if s < 0)

    def to_spin(self, n: int) -> SpinVector:
        if self and self[0] > n:
            raise InvalidWeight(tuple(self), "B", n, f"parts must not exceed {n}")
        return SpinVector(-1 if n + 1 - p in self else 1 for p in range(1, n + 1))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self):
        return f"StrictPartition({tuple(self)!r})"


def staircase(m: int) -> StrictPartition:
    """``(m, m-1, ..., 1)``, empty for ``m <= 0``"""
    return StrictPartition(range(m, 0, -1))


def staircase_between(a: int, b: int) -> StrictPartition:
    """``(a, a-1, ..., b)``, empty when ``b > a``"""
    return StrictPartition(range(a, max(b, 1) - 1, -1))


def strict_partitions(n: int) -> List[StrictPartition]:
    """All ``2^n`` strict partitions with parts at most ``n``"""
    return [
        StrictPartition.from_set(c)
        for k in range(n + 1)
        for c in combinations(range(1, n + 1), k)
    ]


def sp_apply(op: str, i: int, nu: StrictPartition, n: int) -> Optional[StrictPartition]:
    """``e_i``/``f_i`` of type ``B_n`` on a strict partition.

    With ``k = n - i``, ``f_i`` replaces the part ``k`` by ``k + 1`` and ``e_i`` does
    the opposite; a part ``0`` is always available to ``f_n`` and never blocks
    ``e_n``.
    """
    if not 1 <= i <= n:
        raise ValueError(f"{i} is not in the index set of B_{n}")
    k, values = n - i, set(nu)
    if op == "f":
        if (k == 0 or k in values) and k + 1 not in values:
            values.discard(k)
            values.add(k + 1)
            return StrictPartition.from_set(values)
        return None
    if op == "e":
        if k + 1 in values and (k == 0 or k not in values):
            values.discard(k + 1)
            if k:
                values.add(k)
            return StrictPartition.from_set(values)
        return None
    raise ValueError(f"unknown operator {op!r}, expected 'e' or 'f'")


# ---- inner shapes --------------------------------------------------------------


def _contains(upper: Sequence, lower: Sequence, t: int, geq: Callable) -> bool:
    """Whether ``lower`` without its first ``t`` parts fits under ``upper``"""
    tail = lower[t:]
    return len(upper) >= len(tail) and all(geq(a, b) for a, b in zip(upper, tail))


def _shift(upper: Sequence, lower: Sequence, geq: Callable, start=0, step=1) -> int:
    t = start
    while not _contains(upper, lower, t, geq):
        t += step
    return t


def _shapes(lengths: Sequence[int], shifts: Sequence[int]):
    eta = [sum(shifts[i:]) for i in range(len(shifts))]
    mu = [e + length for e, length in zip(eta + [0], lengths)]
    return _strip(mu), _strip(eta)


class RigidTableau(NamedTuple):
    """Sequence of strict partitions, read as a semistandard rigid tableau"""

    rows: Tuple[StrictPartition, ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "RigidTableau":
        return cls(tuple(StrictPartition(r) for r in rows))

    @classmethod
    def from_tensor(cls, b: TensorElement) -> "RigidTableau":
        return cls(tuple(StrictPartition.from_spin(s) for s in reversed(b.atoms)))

    def to_tensor(self, n: int) -> TensorElement:
        atoms = tuple(r.to_spin(n) for r in reversed(self.rows))
        return TensorElement(CartanSpec("B", n), atoms)

    @property
    def shape(self) -> Tuple[Partition, Partition]:
        return ssrt_shape(self)

    @property
    def inner_shape(self) -> Partition:
        return ssrt_shape(self)[1]

    def entries(self) -> List[int]:
        return sorted(p for r in self.rows for p in r)

    def is_standard(self, m: int) -> bool:
        """Every value ``1..m`` occurs exactly once"""
        return self.entries() == list(range(1, m + 1))

    def __str__(self):
        return " / ".join(str(r) for r in self.rows)


def ssrt_shape(tableau: RigidTableau) -> Tuple[Partition, Partition]:
    """Outer and inner shape ``(mu, eta)``; ``eta_i`` sums the shifts ``t_s`` for
    ``s >= i``, where ``t_i`` is the least shift putting row ``i+1`` under row ``i``
    """
    rows = tableau.rows
    shifts = [_shift(upper, lower, operator.ge) for upper, lower in zip(rows, rows[1:])]
    return _shapes([len(r) for r in rows], shifts)


def iterate_sequences(n: int, m: int) -> Iterator[RigidTableau]:
    """Every sequence of ``m`` strict partitions with parts at most ``n``"""
    _check_rank(n)
    limits.check(2 ** (n * m), f"sequences of {m} strict partitions in B_{n}")
    for rows in product(strict_partitions(n), repeat=m):
        yield RigidTableau(rows)


def ssrt_apply(
    op: str, i: int, tableau: RigidTableau, n: int
) -> Optional[RigidTableau]:
    """Crystal operator on a sequence through the tensor product rule"""
    if op not in ("e", "f"):
        raise ValueError(f"unknown operator {op!r}, expected 'e' or 'f'")
    b = tableau.to_tensor(n)
    result = b.e(i) if op == "e" else b.f(i)
    return None if result is None else RigidTableau.from_tensor(result)


# ---- subcrystals of type B -----------------------------------------------------


def rigid_subcrystal(n: int, m: int, eta: Sequence[int]) -> Crystal:
    """``R_(n,m)(eta)``: the sequences of length ``m`` with inner shape ``eta``"""
    eta = _strip(eta)
    if len(eta) >= m:
        raise ValueError(f"an inner shape for {m} rows has fewer than {m} parts")
    members = [T.to_tensor(n) for T in iterate_sequences(n, m) if T.inner_shape == eta]
    _logger.debug(f"R_({n},{m}){eta} has {len(members)} elements")
    return Crystal(CartanSpec("B", n), members)


def fundamental_subcrystal(n: int, k: int) -> Crystal:
    """``R_(n,2)((n-k))``, a copy of ``B(tfw_k)``"""
    return rigid_subcrystal(n, 2, (n - k,))


def almost_spin_subcrystal(n: int, ell: int, k: int) -> Crystal:
    """``R_(n,ell+1)((n-k)^ell)``, a copy of ``B((ell-1) omega_n + tfw_k)``"""
    return rigid_subcrystal(n, ell + 1, (n - k,) * ell)


def motzkin_subcrystal(n: int, s: int, t: int) -> Crystal:
    """``R_(n,3)((s, s-t))``, a copy of ``B(omega_n + tfw_(n-s))``"""
    if not 0 <= t <= s <= n:
        raise ValueError(f"expected 0 <= t <= s <= n, got t={t}, s={s}, n={n}")
    return rigid_subcrystal(n, 3, (s, s - t))


def rigid_highest_weight(n: int, coefficients: Sequence[int]) -> RigidTableau:
    """The highest weight sequence of ``sum c_i omega_i``: ``K`` empty rows
    (``K = sum c_i``) followed by ``c_j`` copies of ``staircase(n-j)`` for
    ``j = n-1, ..., 1``"""
    CartanSpec("B", n).weight_from_fundamental(coefficients)
    rows = [StrictPartition()] * sum(coefficients)
    for j in range(n - 1, 0, -1):
        rows += [staircase(n - j)] * coefficients[j - 1]
    return RigidTableau(tuple(rows))


def rigid_crystal(n: int, coefficients: Sequence[int]) -> CrystalComponent:
    """``R(lambda)``, the closure of :func:`rigid_highest_weight`"""
    return closure(rigid_highest_weight(n, coefficients).to_tensor(n))


def highest_weight_rigid(n: int, m: int) -> List[RigidTableau]:
    return [T for T in iterate_sequences(n, m) if T.to_tensor(n).is_highest_weight()]


def closure_violations(crystal: Crystal) -> List[Tuple[TensorElement, str, int]]:
    """``(b, op, i)`` for every operator leading out of ``crystal``"""
    escapes = []
    for b in crystal:
        for i in crystal.cartan.index_set:
            for op, new in (("e", b.e(i)), ("f", b.f(i))):
                if new is not None and new not in crystal:
                    escapes.append((b, op, i))
    return escapes


def motzkin_standard_set(n: int, s: int, t: int, m: int) -> List[RigidTableau]:
    """Standard tableaux on ``1..m`` inside ``R_(n,3)((s, s-t))``; there are
    ``Mot_(m,s)`` of them"""
    if not 0 <= t <= s <= n - 1:
        raise ValueError(f"expected 0 <= t <= s <= n-1, got t={t}, s={s}, n={n}")
    if m > n:
        raise ValueError(f"standard tableaux on 1..{m} need n >= {m}")
    eta = _strip((s, s - t))
    return [T for T in _distributions(m) if T.inner_shape == eta]


def _assignments(m: int) -> Iterator[List[List[int]]]:
    limits.check(3**m, f"distributions of 1..{m} into three rows")
    for choice in product(range(3), repeat=m):
        rows: List[List[int]] = [[], [], []]
        for value in range(m, 0, -1):
            rows[choice[value - 1]].append(value)
        yield rows


def _distributions(m: int) -> Iterator[RigidTableau]:
    for rows in _assignments(m):
        yield RigidTableau.of(rows)


def dual_conjugate(tableau: RigidTableau, n: int) -> List[List[int]]:
    """Rows of the semistandard Young tableau obtained by transposing a tableau
    with empty inner shape and replacing each entry ``t`` by ``n + 1 - t``"""
    if tableau.inner_shape:
        raise ValueError(f"{tableau} has a non-empty inner shape")
    height = max((len(r) for r in tableau.rows), default=0)
    return [
        [n + 1 - row[j] for row in tableau.rows if len(row) > j] for j in range(height)
    ]


def virtualization_filter(n: int, r: int) -> List[RigidTableau]:
    """Image of ``B(r omega_n)`` of type ``C_n`` inside ``R(2r omega_n)`` of type
    ``B_n``: the tableaux whose outer shape has columns of even length"""
    if r == 0:
        return [RigidTableau(())]
    members = []
    for T in iterate_sequences(n, 2 * r):
        mu, eta = T.shape
        if eta:
            continue
        padded = mu + (0,) * (2 * r - len(mu))
        if all(padded[j] == padded[j + 1] for j in range(0, 2 * r, 2)):
            members.append(T)
    _logger.debug(f"{len(members)} tableaux of R(2*{r} w_{n}) have even columns")
    return members


# ---- coloured alternating strict partitions (type D_(n+1)) --------------------


class ColoredInt(NamedTuple):
    value: int
    color: int = WHITE

    def succeq(self, other: "ColoredInt") -> bool:
        """Same colour and at least as large"""
        return self.color == other.color and self.value >= other.value

    def __str__(self):
        return f"{self.value}'" if self.color == GRAY else str(self.value)


class ASP(NamedTuple):
    """Alternating strict partition.

    ``color`` is the colour of the largest part; for the empty partition it is the
    colour a first part would get (white for ``B(omega_(n+1))``, gray for
    ``B(omega_n)``).
    """

    values: Tuple[int, ...]
    color: int = WHITE

    @classmethod
    def from_values(cls, values: Iterable[int], color: int = WHITE) -> "ASP":
        return cls(tuple(StrictPartition.from_set(values)), color)

    @classmethod
    def from_parts(cls, parts: Sequence[ColoredInt], color: int = WHITE) -> "ASP":
        """Validate explicit coloured parts; ``color`` only matters when empty"""
        if parts:
            color = parts[0].color
        asp = cls.from_values((p.value for p in parts), color)
        if tuple(parts) != asp.parts or len(set(p.value for p in parts)) != len(parts):
            raise ValueError(f"{list(map(str, parts))} is not alternating and strict")
        return asp

    @property
    def parts(self) -> Tuple[ColoredInt, ...]:
        color = self.color
        return tuple(ColoredInt(v, color ^ (j % 2)) for j, v in enumerate(self.values))

    @property
    def next_color(self) -> int:
        """Colour of a part appended at the end"""
        return self.color ^ (len(self.values) % 2)

    def __str__(self):
        inner = ",".join(str(p) for p in self.parts)
        return f"({inner})" if self.values else ("()" if self.color == WHITE else "()'")


def asp_apply(op: str, i: int, tau: ASP, n: int) -> Optional[ASP]:
    """``e_i``/``f_i`` of type ``D_(n+1)``, ``1 <= i <= n+1``.

    For ``i < n`` the operators move a part between ``n-i`` and ``n-i+1``; ``f_n``
    appends a gray ``1`` and ``f_(n+1)`` a white ``1``, when that is the colour
    the alternation asks for.
    """
    if not 1 <= i <= n + 1:
        raise ValueError(f"{i} is not in the index set of D_{n + 1}")
    if op not in ("e", "f"):
        raise ValueError(f"unknown operator {op!r}, expected 'e' or 'f'")
    values = set(tau.values)
    if i < n:
        low, high = n - i, n - i + 1
        src, dst = (low, high) if op == "f" else (high, low)
        if src in values and dst not in values:
            values.discard(src)
            values.add(dst)
            return ASP.from_values(values, tau.color)
        return None
    color = GRAY if i == n else WHITE
    if op == "f":
        if 1 not in values and tau.next_color == color:
            return ASP(tau.values + (1,), tau.color)
        return None
    if tau.values and tau.values[-1] == 1 and tau.parts[-1].color == color:
        return ASP(tau.values[:-1], tau.color)
    return None


def asp_to_spin(tau: ASP, n: int) -> SpinVector:
    """Spin vector of ``D_(n+1)``: ``-`` in position ``n+1-k`` for every part
    ``k``, and in position ``n+1`` exactly when the next part would be gray"""
    if tau.values and tau.values[0] > n:
        raise InvalidWeight(tau.values, "D", n + 1, f"parts must not exceed {n}")
    signs = [-1 if n + 1 - p in tau.values else 1 for p in range(1, n + 1)]
    signs.append(-1 if tau.next_color == GRAY else 1)
    return SpinVector(signs)


def spin_to_asp(spin: SpinVector) -> ASP:
    n = len(spin) - 1
    values = StrictPartition.from_spin(SpinVector(spin[:n]))
    next_color = GRAY if spin[-1] < 0 else WHITE
    return ASP(tuple(values), next_color ^ (len(values) % 2))


def asp_weight(tau: ASP, n: int) -> Tuple[int, ...]:
    """Doubled weight in type ``D_(n+1)``"""
    return tuple(asp_to_spin(tau, n))


def asp_part_weight(part: ColoredInt, n: int) -> Tuple[int, ...]:
    """Doubled weight change caused by one part, relative to the empty partition of
    the same colour: ``-epsilon_(n+1-k) - epsilon_(n+1)`` for a white ``k`` and
    ``-epsilon_(n+1-k) + epsilon_(n+1)`` for a gray one"""
    weight = [0] * (n + 1)
    weight[n - part.value] = -2
    weight[n] = 2 if part.color == GRAY else -2
    return tuple(weight)


def asps(n: int, color: int) -> List[ASP]:
    return [ASP(tuple(v), color) for v in strict_partitions(n)]


def asp_orbit(tau: ASP, n: int) -> List[ASP]:
    """Breadth-first closure of ``tau`` under :func:`asp_apply`"""
    seen = {tau}
    queue = deque([tau])
    while queue:
        current = queue.popleft()
        for i in range(1, n + 2):
            for op in "ef":
                new = asp_apply(op, i, current, n)
                if new is not None and new not in seen:
                    seen.add(new)
                    queue.append(new)
    return sorted(seen)


class SpinRigidTableau(NamedTuple):
    """Sequence of ASPs, read as a semistandard spin rigid tableau"""

    rows: Tuple[ASP, ...]

    @classmethod
    def from_tensor(cls, b: TensorElement) -> "SpinRigidTableau":
        return cls(tuple(spin_to_asp(s) for s in reversed(b.atoms)))

    def to_tensor(self, n: int) -> TensorElement:
        atoms = tuple(asp_to_spin(r, n) for r in reversed(self.rows))
        return TensorElement(CartanSpec("D", n + 1), atoms)

    @property
    def shape(self) -> Tuple[Partition, Partition]:
        return sssrt_shape(self)

    @property
    def inner_shape(self) -> Partition:
        return sssrt_shape(self)[1]

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(r.values) for r in self.rows)

    def __str__(self):
        return " / ".join(str(r) for r in self.rows)


def sssrt_shape(tableau: SpinRigidTableau) -> Tuple[Partition, Partition]:
    """As :func:`ssrt_shape`, comparing parts with :meth:`ColoredInt.succeq`; the
    shift between two rows has the parity that lines their colours up"""
    rows = tableau.rows
    shifts = [
        _shift(
            upper.parts, lower.parts, ColoredInt.succeq, upper.color ^ lower.color, 2
        )
        for upper, lower in zip(rows, rows[1:])
    ]
    return _shapes([len(r.values) for r in rows], shifts)


class ColorPattern(Enum):
    """Colours of the largest parts of the three rows"""

    ALL_WHITE = (0, 0, 0)
    FIRST_GRAY = (1, 0, 0)
    LAST_GRAY = (0, 0, 1)


def riordan_pattern(x: int, odd: bool) -> ColorPattern:
    if not odd:
        return ColorPattern.ALL_WHITE
    return ColorPattern.FIRST_GRAY if x == 1 else ColorPattern.LAST_GRAY


def riordan_inner_shape(s: int, x: int, odd: bool) -> Partition:
    first = 2 * s + 1 if odd else 2 * s
    return _strip((first, first if x == 0 else 0))


def riordan_highest_weight(n: int, s: int, odd: bool) -> Tuple[int, ...]:
    """Doubled weight ``omega_(n+1) + tfw_j`` of type ``D_(n+1)``, with
    ``j = n+1-2s`` (or ``n-2s`` when ``odd``)"""
    cartan = CartanSpec("D", n + 1)
    j = n - 2 * s if odd else n + 1 - 2 * s
    top = cartan.fundamental_weight(n + 1)
    return top if j == 0 else tuple(a + b for a, b in zip(top, cartan.tfw(j)))


def _check_riordan(n: int, s: int, x: int, odd: bool):
    bound = n // 2 if odd else (n + 1) // 2
    if x not in (0, 1) or not 0 <= s <= bound:
        raise ValueError(f"expected x in (0, 1), 0 <= s <= {bound}; got x={x}, s={s}")


def _in_riordan(tableau: SpinRigidTableau, s: int, x: int, odd: bool) -> bool:
    colors = tuple(r.color for r in tableau.rows)
    return (
        colors == riordan_pattern(x, odd).value
        and tableau.inner_shape == riordan_inner_shape(s, x, odd)
    )


def spin_rigid_subcrystal(n: int, s: int, x: int, odd: bool = False) -> Crystal:
    """``R^x`` (or the mixed spin variant when ``odd``) as a subcrystal of three
    spin crystals of type ``D_(n+1)``"""
    _check_rank(n, "D")
    _check_riordan(n, s, x, odd)
    colors = riordan_pattern(x, odd).value
    limits.check(2 ** (3 * n), f"triples of alternating strict partitions in D_{n + 1}")
    choices = [asps(n, c) for c in colors]
    members = [
        T.to_tensor(n)
        for T in map(SpinRigidTableau, product(*choices))
        if _in_riordan(T, s, x, odd)
    ]
    _logger.debug(f"Spin rigid subcrystal (s={s}, x={x}, odd={odd}): {len(members)}")
    return Crystal(CartanSpec("D", n + 1), members)


def is_almost_even(composition: Sequence[int]) -> bool:
    """One odd part for an odd total, two odd parts for an even total"""
    odd_parts = sum(p % 2 for p in composition)
    return odd_parts == (1 if sum(composition) % 2 else 2)


def _riordan_lengths(lengths: Tuple[int, ...], s: int, x: int, odd: bool):
    if not odd:
        return lengths
    a, b, c = lengths
    pad = 2 * s + 1
    return (a, b + pad, c + pad) if x == 1 else (a, b, c + pad)


def riordan_sets(
    n: int, s: int, x: int, m: int, odd: bool = False
) -> List[SpinRigidTableau]:
    """Standard spin rigid tableaux on ``1..m`` in type ``D_(n+1)``, counted by
    ``Rior_(m+1,2s)`` (or ``Rior_(m+1,2s+1)`` when ``odd``).

    The entries must fit in alternating strict partitions of rank ``n``, so
    ``m <= n``.
    """
    _check_rank(n, "D")
    _check_riordan(n, s, x, odd)
    _check_riordan(m, s, x, odd)
    if m > n:
        raise ValueError(f"m={m} exceeds the rank n={n}")
    if m < (2 * s if odd else 2 * s - 1):
        raise ValueError(f"m={m} is too small for s={s}")
    colors = riordan_pattern(x, odd).value
    result = []
    for rows in _assignments(m):
        T = SpinRigidTableau(tuple(ASP(tuple(r), c) for r, c in zip(rows, colors)))
        if not is_almost_even(_riordan_lengths(T.lengths, s, x, odd)):
            continue
        if _in_riordan(T, s, x, odd):
            result.append(T)
    return result
