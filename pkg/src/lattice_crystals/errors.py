from textwrap import dedent

from .error_reporting import ValidationError


class LatticeCrystalsError(Exception):
    """Base class for the errors raised by :mod:`lattice_crystals`"""

    def __init__(self, **kwargs):
        msg = dedent(self.__doc__ or "").strip()
        super().__init__(msg.format(**kwargs))


class ResourceCapExceeded(LatticeCrystalsError):
    """\
    Enumerating {what} would produce {count} objects, which exceeds the active \
    resource cap of {cap}.

    Raise the cap with `--cap` or the `LATTICE_CRYSTALS_CAP` environment variable.
    """

    def __init__(self, what: str, count: int, cap: int):
        self.what, self.count, self.cap = what, count, cap
        super().__init__(what=what, count=count, cap=cap)


class InvalidWord(LatticeCrystalsError, ValueError):
    """The word {word!r} is not a valid {kind}."""

    def __init__(self, word: str, kind: str):
        self.word, self.kind = word, kind
        super().__init__(word=word, kind=kind)


class InvalidWeight(LatticeCrystalsError, ValueError):
    """\
    The weight {weight!r} is not valid for type {family}_{rank}: {reason}.
    """

    def __init__(self, weight, family: str, rank: int, reason: str):
        super().__init__(weight=weight, family=family, rank=rank, reason=reason)


class InvalidFamily(LatticeCrystalsError, ValueError):
    """Type {family}_{rank} is not supported by {operation}."""

    def __init__(self, family: str, rank: int, operation: str):
        super().__init__(family=family, rank=rank, operation=operation)


class InexactDivision(LatticeCrystalsError, ArithmeticError):
    """\
    Exact division failed: {dividend} is not divisible by {divisor} \
    (remainder {remainder}).
    """

    def __init__(self, dividend, divisor, remainder):
        self.remainder = remainder
        super().__init__(dividend=dividend, divisor=divisor, remainder=remainder)


class ZeroValuation(LatticeCrystalsError, ArithmeticError):
    """The valuation of the zero polynomial is undefined."""


class IntersectingFamily(LatticeCrystalsError, ValueError):
    """The path family {family!r} cannot be used here: {reason}."""

    def __init__(self, family, reason: str):
        super().__init__(family=family, reason=reason)


class OracleMismatch(LatticeCrystalsError):
    """\
    {method} gives {value}, but the crystal oracle counts {expected} \
    for {subject}.
    """

    def __init__(self, subject: str, method: str, value, expected):
        self.value, self.expected = value, expected
        super().__init__(subject=subject, method=method, value=value, expected=expected)


class SchemaMissingId(LatticeCrystalsError, ValueError):
    """\
    All schemas bundled with the package must have a top level `$id`, \
    {reference!r} does not.
    """

    def __init__(self, reference: str):
        super().__init__(reference=reference)


class SchemaWithDuplicatedId(LatticeCrystalsError, ValueError):
    """The schema `$id` {schema_id!r} is used more than once."""

    def __init__(self, schema_id: str):
        super().__init__(schema_id=schema_id)


class UnknownIdentity(LatticeCrystalsError, KeyError):
    """\
    No identity named {name!r} is registered.
    Use `lattice-crystals verify --list` to see the available names.
    """

    def __init__(self, name: str):
        self.name = name
        super().__init__(name=name)

    def __str__(self):
        return self.args[0]


__all__ = [
    "InexactDivision",
    "IntersectingFamily",
    "InvalidFamily",
    "InvalidWeight",
    "InvalidWord",
    "LatticeCrystalsError",
    "OracleMismatch",
    "ResourceCapExceeded",
    "SchemaMissingId",
    "SchemaWithDuplicatedId",
    "UnknownIdentity",
    "ValidationError",
    "ZeroValuation",
]


class ErrorLoadingPlugin(LatticeCrystalsError, RuntimeError):
    """\
    There was an error loading the identity plugin {plugin!r}: {reason}.
    Please make sure you have installed a version of the plugin that is \
    compatible with lattice-crystals {version}, or try uninstalling it.
    """

    def __init__(self, plugin: str, reason: str = "it could not be imported"):
        from . import __version__

        self.plugin = plugin
        super().__init__(plugin=plugin, reason=reason, version=__version__)
