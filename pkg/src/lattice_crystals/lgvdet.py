"""
Path generating functions on weighted acyclic graphs, exact determinants over
commutative rings and the Lindström-Gessel-Viennot correspondence between them.

Every determinant is computed without divisions, so the same code serves the
integers, Laurent polynomials and group algebras of weight lattices.

>>> det_division_free([[2, 5], [5, 14]])
3
"""
import logging
from itertools import permutations
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from . import limits
from .errors import IntersectingFamily
from .exactpoly import BiLaurentPoly, GroupAlgebraElement, LaurentPoly
from .paths import LatticeWord
from .types import RingMatrix

_logger = logging.getLogger(__name__)

Vertex = Hashable
Point = Tuple[int, int]


class Ring(NamedTuple):
    """Tag of a commutative ring together with its neutral elements"""

    name: str
    zero: Any
    one: Any


INTEGERS = Ring("integer", 0, 1)
LAURENT = Ring("laurent_poly", LaurentPoly(), LaurentPoly(1))
BILAURENT = Ring("bi_laurent_poly", BiLaurentPoly(), BiLaurentPoly(1))
GROUP_ALGEBRA = Ring("group_algebra", GroupAlgebraElement(), GroupAlgebraElement(1))

_RINGS_BY_TYPE = {
    int: INTEGERS,
    LaurentPoly: LAURENT,
    BiLaurentPoly: BILAURENT,
    GroupAlgebraElement: GROUP_ALGEBRA,
}


def ring_of(value) -> Ring:
    """Ring tag of an element (plain ``int`` entries belong to every ring)"""
    try:
        return _RINGS_BY_TYPE[type(value)]
    except KeyError:
        raise TypeError(f"{value!r} is not an element of a supported ring") from None


def common_ring(values: Iterable) -> Ring:
    found = INTEGERS
    for value in values:
        ring = ring_of(value)
        if ring is INTEGERS:
            continue
        if found is not INTEGERS and ring is not found:
            raise TypeError(f"cannot mix {found.name} and {ring.name} entries")
        found = ring
    return found


# ---- graphs --------------------------------------------------------------------


class WeightedDAG:
    """Finite directed acyclic graph with ring-valued edge weights.

    Vertices are arbitrary hashable labels (grid graphs use ``(x, y)`` points);
    internally they are numbered in a topological order, which is computed and
    checked once on construction.
    """

    def __init__(
        self,
        edges: Iterable[Tuple[Vertex, Vertex, Any]],
        ring: Ring = INTEGERS,
        vertices: Iterable[Vertex] = (),
    ):
        self.ring = ring
        labels: Dict[Vertex, int] = {}
        for x in vertices:
            labels.setdefault(x, len(labels))
        raw: List[Tuple[int, int, Any]] = []
        for u, v, w in edges:
            for x in (u, v):
                if x not in labels:
                    labels[x] = len(labels)
            raw.append((labels[u], labels[v], w))

        size = len(labels)
        out: List[List[Tuple[int, Any]]] = [[] for _ in range(size)]
        indegree = [0] * size
        for u, v, w in raw:
            out[u].append((v, w))
            indegree[v] += 1

        # Kahn's algorithm
        order = [x for x in range(size) if indegree[x] == 0]
        for x in order:
            for y, _ in out[x]:
                indegree[y] -= 1
                if indegree[y] == 0:
                    order.append(y)
        if len(order) != size:
            raise ValueError("the graph has a directed cycle")

        position = {old: new for new, old in enumerate(order)}
        by_id = {i: label for label, i in labels.items()}
        self._labels: List[Vertex] = [by_id[old] for old in order]
        self._ids: Dict[Vertex, int] = {
            label: i for i, label in enumerate(self._labels)
        }
        self._out: List[List[Tuple[int, Any]]] = [
            [(position[y], w) for y, w in out[old]] for old in order
        ]
        _logger.debug(f"Built a DAG with {size} vertices and {len(raw)} edges")

    def __len__(self):
        return len(self._labels)

    def __contains__(self, label):
        return label in self._ids

    @property
    def vertices(self) -> List[Vertex]:
        """Vertex labels in topological order"""
        return list(self._labels)

    def vertex_id(self, label: Vertex) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a vertex of the graph") from None

    def label(self, vertex_id: int) -> Vertex:
        return self._labels[vertex_id]

    def successors(self, label: Vertex) -> List[Tuple[Vertex, Any]]:
        return [(self._labels[y], w) for y, w in self._out[self.vertex_id(label)]]

    def session(self, counting: bool = False) -> "PathSession":
        """Memoized path queries; ``counting=True`` ignores the weights"""
        return PathSession(self, counting)


class PathSession:
    """Memo table for path generating functions on one graph.

    Each source is swept once in topological order; later queries from the same
    source are answered from the table.
    """

    def __init__(self, graph: WeightedDAG, counting: bool = False):
        self.graph = graph
        self.counting = counting
        self._from: Dict[int, List[Any]] = {}

    def _sweep(self, source: int) -> List[Any]:
        if source not in self._from:
            ring = INTEGERS if self.counting else self.graph.ring
            values: List[Any] = [ring.zero] * len(self.graph)
            values[source] = ring.one
            for x in range(source, len(self.graph)):
                if values[x] == ring.zero:
                    continue
                for y, w in self.graph._out[x]:
                    step = values[x] if self.counting else values[x] * w
                    values[y] = values[y] + step
            self._from[source] = values
        return self._from[source]

    def path_gf(self, u: Vertex, v: Vertex):
        graph = self.graph
        return self._sweep(graph.vertex_id(u))[graph.vertex_id(v)]

    def matrix(self, sources: Sequence[Vertex], sinks: Sequence[Vertex]) -> RingMatrix:
        """The matrix ``[e(s_i, t_j)]``"""
        return [[self.path_gf(s, t) for t in sinks] for s in sources]


def path_gf(graph: WeightedDAG, u: Vertex, v: Vertex):
    """Sum over all paths ``u -> v`` of the product of their edge weights.

    >>> g = catalan_graph(2, 2)
    >>> path_gf(g, (0, 0), (2, 2))
    2
    """
    return graph.session().path_gf(u, v)


def path_matrix(graph: WeightedDAG, sources: Sequence[Vertex], sinks: Sequence[Vertex]):
    return graph.session().matrix(sources, sinks)


def grid_graph(
    width: int,
    height: int,
    weight: Optional[Callable[[str, int, int], Any]] = None,
    region: Optional[Callable[[int, int], bool]] = None,
    ring: Ring = INTEGERS,
) -> WeightedDAG:
    """Grid on ``[0, width] x [0, height]`` with ``E`` and ``N`` unit steps.

    ``weight(step, x, y)`` gives the weight of the step leaving ``(x, y)``
    (default: the ring's one) and ``region(x, y)`` restricts the vertices.
    """
    inside = region or (lambda x, y: True)
    weigh = weight or (lambda step, x, y: ring.one)
    edges, points = [], []
    for x in range(width + 1):
        for y in range(height + 1):
            if not inside(x, y):
                continue
            points.append((x, y))
            if x < width and inside(x + 1, y):
                edges.append(((x, y), (x + 1, y), weigh("E", x, y)))
            if y < height and inside(x, y + 1):
                edges.append(((x, y), (x, y + 1), weigh("N", x, y)))
    return WeightedDAG(edges, ring, points)


def catalan_graph(
    width: int,
    height: int,
    weight: Optional[Callable[[str, int, int], Any]] = None,
    ring: Ring = INTEGERS,
) -> WeightedDAG:
    """Grid restricted to ``y <= x``: paths from the origin are partial Dyck"""
    return grid_graph(width, height, weight, lambda x, y: y <= x, ring)


def area_weight(step: str, x: int, y: int) -> LaurentPoly:
    """``q^(x - y - 1)`` on ``N`` steps, so a Dyck path weighs ``q^area``"""
    if step == "N":
        return LaurentPoly.monomial(x - y - 1)
    return LaurentPoly(1)


# ---- determinants --------------------------------------------------------------


def _square(matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    rows = [list(row) for row in matrix]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("expected a square matrix")
    return rows


def det_division_free(matrix: Sequence[Sequence[Any]], ring: Optional[Ring] = None):
    """Determinant by Berkowitz's algorithm (only ``+``, ``-`` and ``*``).

    The characteristic polynomial of each leading principal submatrix is obtained
    from the previous one by a Toeplitz matrix-vector product.
    """
    rows = _square(matrix)
    n = len(rows)
    ring = ring or common_ring(x for row in rows for x in row)
    if n == 0:
        return ring.one
    _logger.debug(f"Berkowitz determinant of a {n}x{n} {ring.name} matrix")

    def dot(left, right):
        total = ring.zero
        for a, b in zip(left, right):
            total = total + a * b
        return total

    charpoly = [ring.one]
    for k in range(1, n + 1):
        head = [rows[i][: k - 1] for i in range(k - 1)]
        row = rows[k - 1][: k - 1]
        column = [r[k - 1] for r in rows[: k - 1]]
        corner = rows[k - 1][k - 1]
        toeplitz = [ring.one, -corner]
        vector = column
        for _ in range(k - 1):
            toeplitz.append(-dot(row, vector))
            vector = [dot(h, vector) for h in head]
        new = []
        for i in range(k + 1):
            total = ring.zero
            for j in range(min(i, k - 1) + 1):
                total = total + toeplitz[i - j] * charpoly[j]
            new.append(total)
        charpoly = new
    return charpoly[n] if n % 2 == 0 else -charpoly[n]


def det_cofactor(matrix: Sequence[Sequence[Any]], ring: Optional[Ring] = None):
    """Laplace expansion along the first row (only for small matrices)"""
    rows = _square(matrix)
    ring = ring or common_ring(x for row in rows for x in row)
    if not rows:
        return ring.one
    if len(rows) == 1:
        return rows[0][0]
    total = ring.zero
    for j, entry in enumerate(rows[0]):
        if entry == ring.zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * det_cofactor(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def hankel(entry: Callable[[int], Any], size: int, offset: int = 0) -> RingMatrix:
    """The matrix ``[entry(offset + i + j)]`` for ``0 <= i, j < size``"""
    values = [entry(offset + k) for k in range(2 * size - 1)] if size else []
    return [[values[i + j] for j in range(size)] for i in range(size)]


def is_hankel(matrix: Sequence[Sequence[Any]]) -> bool:
    rows = _square(matrix)
    n = len(rows)
    return all(
        rows[i][j] == rows[i + 1][j - 1] for i in range(n - 1) for j in range(1, n)
    )


# ---- Lindström-Gessel-Viennot ----------------------------------------------------


class PathFamily(NamedTuple):
    """Paths ``P^(i): s_i -> t_sigma(i)`` given as vertex sequences"""

    paths: Tuple[Tuple[Vertex, ...], ...]
    permutation: Tuple[int, ...]
    sign: int
    weight: Any

    @property
    def is_identity(self) -> bool:
        return all(i == s for i, s in enumerate(self.permutation))

    def words(self) -> List[LatticeWord]:
        """Step words of the paths (grid graphs only)"""
        return [_grid_word(path) for path in self.paths]

    def is_non_intersecting(self) -> bool:
        seen: set = set()
        for path in self.paths:
            if seen.intersection(path):
                return False
            seen.update(path)
        return True


def _grid_word(path: Sequence[Point]) -> LatticeWord:
    steps = []
    for (x0, y0), (x1, y1) in zip(path, path[1:]):
        if (x1 - x0, y1 - y0) == (1, 0):
            steps.append("E")
        elif (x1 - x0, y1 - y0) == (0, 1):
            steps.append("N")
        else:
            raise ValueError(f"{path!r} is not a path of unit grid steps")
    return LatticeWord("".join(steps))


def permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _paths(
    graph: WeightedDAG, source: int, sink: int
) -> Iterator[Tuple[Tuple[int, ...], Any]]:
    ring = graph.ring
    # vertices that can still reach the sink
    alive = [False] * len(graph)
    alive[sink] = True
    for x in range(sink - 1, source - 1, -1):
        alive[x] = any(alive[y] for y, _ in graph._out[x])
    if source > sink or not alive[source]:
        return

    def walk(x: int, trail: List[int], weight) -> Iterator[Tuple[Tuple[int, ...], Any]]:
        if x == sink:
            yield tuple(trail), weight
            return
        for y, w in graph._out[x]:
            if y <= sink and alive[y]:
                trail.append(y)
                yield from walk(y, trail, weight * w)
                trail.pop()

    yield from walk(source, [source], ring.one)


def lgv_enumerate(
    graph: WeightedDAG,
    sources: Sequence[Vertex],
    sinks: Sequence[Vertex],
    identity_only: bool = False,
) -> List[PathFamily]:
    """All vertex-disjoint path families from ``sources`` to a permutation of
    ``sinks``, with their signs and weights.

    With ``identity_only=True`` a non-identity family raises
    :exc:`IntersectingFamily` instead of being returned.
    """
    if len(sources) != len(sinks):
        raise ValueError("expected as many sources as sinks")
    k = len(sources)
    src = [graph.vertex_id(s) for s in sources]
    dst = [graph.vertex_id(t) for t in sinks]

    counter = graph.session(counting=True)
    pool: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], Any]]] = {}
    total = 0
    for i in range(k):
        for j in range(k):
            total += counter.path_gf(sources[i], sinks[j])
            limits.check(total, f"paths between {k} sources and sinks")
            pool[i, j] = list(_paths(graph, src[i], dst[j]))

    families: List[PathFamily] = []
    for perm in permutations(range(k)):
        sign = permutation_sign(perm)

        def extend(
            i: int, used: set, chosen: list, weight
        ) -> Iterator[Tuple[list, Any]]:
            if i == k:
                yield list(chosen), weight
                return
            for path, w in pool[i, perm[i]]:
                if used.isdisjoint(path):
                    chosen.append(path)
                    yield from extend(i + 1, used | set(path), chosen, weight * w)
                    chosen.pop()

        for chosen, weight in extend(0, set(), [], graph.ring.one):
            family = PathFamily(
                tuple(tuple(graph.label(x) for x in path) for path in chosen),
                perm,
                sign,
                weight,
            )
            if identity_only and not family.is_identity:
                reason = "only sigma = id may contribute"
                raise IntersectingFamily(family.permutation, reason)
            families.append(family)
    _logger.debug(f"Found {len(families)} non-intersecting families")
    return families


def lgv_signed_sum(families: Iterable[PathFamily], ring: Ring = INTEGERS):
    total = ring.zero
    for family in families:
        total = total + family.weight if family.sign > 0 else total - family.weight
    return total
