"""
Generic runner for named identities.

An :class:`Identity` is plain data: a name, a function producing the parameter
instances up to a bound and a function comparing both sides of one instance. The
runner does not know anything about the mathematics behind each entry.
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from itertools import chain, repeat
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from .. import limits
from ..errors import InexactDivision, ResourceCapExceeded, UnknownIdentity
from ..types import Counterexample

_logger = logging.getLogger(__name__)

Params = Dict[str, int]
PROFILES = ("small", "full")


class Status(str, Enum):
    VERIFIED = "verified"
    FAILED = "failed"
    SKIPPED = "skipped"


class Comparison(NamedTuple):
    """Both sides of one instance and whether the relation between them holds"""

    lhs: Any
    rhs: Any
    holds: bool

    @classmethod
    def equal(cls, lhs, rhs) -> "Comparison":
        return cls(lhs, rhs, lhs == rhs)


class Identity(NamedTuple):
    name: str
    check: Callable[..., Comparison]
    domain: Callable[[int], Iterable[Params]]
    bounds: Tuple[int, int]
    """Default bound for the ``small`` and ``full`` profiles"""
    kind: str = "identity"
    note: str = ""

    @property
    def description(self) -> str:
        doc = (self.check.__doc__ or "").strip()
        return doc.splitlines()[0] if doc else ""

    def bound(self, profile: str = "small") -> int:
        if profile not in PROFILES:
            raise ValueError(f"profile must be one of {PROFILES}, got {profile!r}")
        return self.bounds[PROFILES.index(profile)]

    def instances(self, bound: int) -> List[Params]:
        return list(self.domain(bound))


class IdentityReport(NamedTuple):
    name: str
    kind: str
    bound: Optional[int]
    checked: int
    status: Status
    counterexample: Optional[Counterexample] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILED

    @classmethod
    def failure(
        cls,
        identity: Identity,
        bound: Optional[int],
        checked: int,
        counterexample: Counterexample,
    ) -> "IdentityReport":
        if not counterexample:
            raise ValueError(f"a failed {identity.name} report needs a counterexample")
        return cls(
            identity.name,
            identity.kind,
            bound,
            checked,
            Status.FAILED,
            counterexample,
            identity.note,
        )

    def summary(self) -> str:
        scope = f"up to {self.bound}" if self.bound is not None else "for one instance"
        text = f"{self.name}: {self.status.value} {scope} ({self.checked} checked)"
        if self.counterexample:
            text += f"\n    counterexample: {dict(self.counterexample)}"
        if self.note:
            text += f"\n    note: {self.note}"
        return text


class Outcome(NamedTuple):
    params: Params
    comparison: Optional[Comparison]
    error: str = ""
    skipped: bool = False


def _evaluate(check: Callable[..., Comparison], params: Params, cap: int) -> Outcome:
    # Exceptions are flattened into the outcome so it can cross process boundaries
    with limits.override(cap=cap):
        try:
            return Outcome(params, check(**params))
        except InexactDivision as ex:
            return Outcome(params, None, str(ex))
        except ResourceCapExceeded as ex:
            return Outcome(params, None, str(ex), skipped=True)


def _outcomes(
    check: Callable[..., Comparison], instances: Sequence[Params], jobs: int
) -> Iterator[Outcome]:
    cap = limits.active().cap
    if jobs <= 1 or len(instances) <= 1:
        yield from map(_evaluate, repeat(check), instances, repeat(cap))
        return
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        yield from executor.map(_evaluate, repeat(check), instances, repeat(cap))


def _counterexample(params: Params, comparison: Optional[Comparison], error: str):
    if comparison is None:
        return {"parameters": params, "error": error}
    return {"parameters": params, "lhs": comparison.lhs, "rhs": comparison.rhs}


def _run(identity: Identity, instances: List[Params], bound: Optional[int], jobs: int):
    checked = 0
    for outcome in _outcomes(identity.check, instances, jobs):
        if outcome.skipped:
            _logger.warning(f"Skipping {identity.name}: {outcome.error}")
            return IdentityReport(
                identity.name,
                identity.kind,
                bound,
                checked,
                Status.SKIPPED,
                note=outcome.error,
            )
        checked += 1
        comparison = outcome.comparison
        if comparison is None or not comparison.holds:
            example = _counterexample(outcome.params, comparison, outcome.error)
            _logger.info(f"{identity.name} fails at {outcome.params}")
            return IdentityReport.failure(identity, bound, checked, example)
    status = Status.VERIFIED if checked else Status.SKIPPED
    return IdentityReport(
        identity.name, identity.kind, bound, checked, status, note=identity.note
    )


def verify(
    identity: Identity,
    bound: Optional[int] = None,
    jobs: int = 1,
    sample: Optional[int] = None,
):
    """Check every instance of ``identity`` up to ``bound``, stopping at the first
    failure (instances are visited in a fixed order, so the counterexample is
    reproducible).

    With ``sample``, only that many instances are checked, drawn with the seed of
    the active limits.
    """
    active = limits.active()
    if bound is None:
        bound = identity.bound(active.profile)
    instances = identity.instances(bound)
    if sample is not None and sample < len(instances):
        chosen = random.Random(active.seed).sample(range(len(instances)), sample)
        instances = [instances[i] for i in sorted(chosen)]
    _logger.info(f"Checking {identity.name} on {len(instances)} instances")
    return _run(identity, instances, bound, jobs)


def run_instance(identity: Identity, **params: int) -> IdentityReport:
    return _run(identity, [dict(params)], None, 1)


def verify_many(
    identities: Iterable[Identity],
    bound: Optional[int] = None,
    jobs: int = 1,
    sample: Optional[int] = None,
) -> List[IdentityReport]:
    """Reports sorted by identity name"""
    ordered = sorted(identities, key=lambda identity: identity.name)
    return [verify(identity, bound, jobs, sample) for identity in ordered]


class Registry(Mapping[str, Identity]):
    """Identities available by name, later entries overriding earlier ones"""

    def __init__(self, identities: Iterable[Identity] = ()):
        self._entries: Dict[str, Identity] = {}
        for identity in identities:
            if identity.name in self._entries:
                _logger.warning(f"{identity.name!r} is registered more than once")
            self._entries[identity.name] = identity

    @classmethod
    def from_plugins(cls, plugins: Iterable[Any]) -> "Registry":
        return cls(chain.from_iterable(plugin.identities for plugin in plugins))

    def __getitem__(self, name: str) -> Identity:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownIdentity(name) from None

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def select(self, names: Sequence[str]) -> List[Identity]:
        if not names or list(names) == ["all"]:
            return [self[name] for name in self]
        return [self[name] for name in names]

    def of_kind(self, kind: str) -> List[Identity]:
        return [self[name] for name in self if self[name].kind == kind]


def triangle_domain(
    bound: int, low: int = 0, start: int = 0, name: str = "s"
) -> Iterator[Params]:
    """``{"n": n, name: s}`` for ``start <= s <= n`` and ``low <= n <= bound``"""
    for n in range(low, bound + 1):
        for s in range(start, n + 1):
            yield {"n": n, name: s}


def range_domain(bound: int, low: int = 0, name: str = "n") -> Iterator[Params]:
    for n in range(low, bound + 1):
        yield {name: n}


def grid_domain(bound: int, low: int = 1) -> Iterator[Params]:
    """``{"n": n, "r": r}`` for ``low <= n, r <= bound``"""
    for n in range(low, bound + 1):
        for r in range(low, bound + 1):
            yield {"n": n, "r": r}


def as_mapping(report: IdentityReport) -> Mapping[str, Any]:
    data = report._asdict()
    data["status"] = report.status.value
    return data
