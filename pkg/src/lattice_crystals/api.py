"""
JSON serialization of the values computed by :mod:`lattice_crystals` and
validation of the serialized output against the bundled JSON schemas.
"""
import json
import logging
from enum import Enum
from types import MappingProxyType, ModuleType
from typing import Any, Callable, Dict, Iterator, Mapping, Optional, Sequence, Union

import fastjsonschema

from . import errors, formats
from .error_reporting import detailed_errors
from .exactpoly import BiLaurentPoly, GroupAlgebraElement, LaurentPoly
from .identities.base import IdentityReport, as_mapping
from .types import FormatValidationFn, Schema

_logger = logging.getLogger(__name__)

try:  # pragma: no cover
    from importlib.resources import files

    def read_text(package: Union[str, ModuleType], resource) -> str:
        return files(package).joinpath(resource).read_text(encoding="utf-8")

except ImportError:  # pragma: no cover
    from importlib.resources import read_text

SCHEMAS = (
    "laurent_poly",
    "bi_laurent_poly",
    "identity_report",
    "word_listing",
    "character",
    "multiplicity",
    "tableau",
)


def _get_public_functions(module: ModuleType) -> Mapping[str, FormatValidationFn]:
    return {
        fn.__name__.replace("_", "-"): fn
        for fn in module.__dict__.values()
        if callable(fn) and not fn.__name__.startswith("_")
    }


FORMAT_FUNCTIONS = MappingProxyType(_get_public_functions(formats))


def load(name: str, package: str = __package__, ext: str = ".schema.json") -> Schema:
    """Load the schema from a JSON Schema file.
    The returned dict-like object is immutable.
    """
    return Schema(json.loads(read_text(package, f"{name}{ext}")))


class SchemaRegistry(Mapping[str, Schema]):
    """The bundled schemas indexed by their ``$id``, so ``$ref`` between them is
    resolved locally"""

    def __init__(self, names: Sequence[str] = SCHEMAS):
        self._schemas: Dict[str, Schema] = {}
        self._by_name: Dict[str, str] = {}
        for name in names:
            schema = load(name)
            sid = schema.get("$id")
            if not sid:
                raise errors.SchemaMissingId(name)
            if sid in self._schemas:
                raise errors.SchemaWithDuplicatedId(sid)
            self._schemas[sid] = schema
            self._by_name[name] = sid

    def id_of(self, name: str) -> str:
        return self._by_name[name]

    def __getitem__(self, key: str) -> Schema:
        return self._schemas[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._schemas)

    def __len__(self) -> int:
        return len(self._schemas)


class RefHandler(Mapping[str, Callable[[str], Schema]]):
    """:mod:`fastjsonschema` allows passing a dict-like object to load external schema
    ``$ref``s. Such objects map the URI schema (e.g. ``http``, ``https``, ``ftp``)
    into a function that receives the schema URI and returns the schema (as parsed JSON)
    (otherwise :mod:`urllib` is used and the URI is assumed to be a valid URL).
    This class will ensure all the URIs are loaded from the local registry.
    """

    def __init__(self, registry: Mapping[str, Schema]):
        self._uri_schemas = ["http", "https"]
        self._registry = registry

    def __contains__(self, key) -> bool:
        return_val = isinstance(key, str)
        if return_val and key not in self._uri_schemas:
            self._uri_schemas.append(key)
        return return_val

    def __iter__(self) -> Iterator[str]:
        return iter(self._uri_schemas)

    def __len__(self):
        return len(self._uri_schemas)

    def __getitem__(self, key: str) -> Callable[[str], Schema]:
        """All the references should be retrieved from the registry"""
        return self._registry.__getitem__


class Validator:
    """Validate serialized output (see :func:`to_json`) against one of the bundled
    schemas, raising :exc:`~lattice_crystals.errors.ValidationError`"""

    def __init__(
        self,
        name: str,
        format_validators: Mapping[str, FormatValidationFn] = FORMAT_FUNCTIONS,
        registry: Optional[SchemaRegistry] = None,
    ):
        self._name = name
        self._format_validators = MappingProxyType(format_validators)
        self._registry = registry or SchemaRegistry()
        self.handlers = RefHandler(self._registry)
        self._cache: Optional[Callable[[Any], Any]] = None

    @property
    def schema(self) -> Schema:
        return self._registry[self._registry.id_of(self._name)]

    @property
    def formats(self) -> Mapping[str, FormatValidationFn]:
        """Mapping between JSON Schema formats and functions that validates them"""
        return self._format_validators

    def __call__(self, data):
        if self._cache is None:
            self._cache = fastjsonschema.compile(
                self.schema, self.handlers, dict(self.formats)
            )
        with detailed_errors():
            self._cache(data)
        return data


# ---- serialization -------------------------------------------------------------


def to_json(obj: Any) -> Any:
    """Convert a value to plain JSON data.

    Integers become decimal strings, except inside exponents and weights which stay
    small JSON numbers. ``LaurentPoly`` becomes ``[[e, "c"], ...]`` and
    ``BiLaurentPoly`` ``[[[a, b], "c"], ...]``, both sorted by exponent.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, LaurentPoly):
        return [[e, str(c)] for e, c in obj.terms()]
    if isinstance(obj, BiLaurentPoly):
        return [[[a, b], str(c)] for (a, b), c in obj.terms()]
    if isinstance(obj, GroupAlgebraElement):
        return [[list(k), str(c)] for k, c in sorted(obj.terms())]
    if isinstance(obj, IdentityReport):
        return to_json(as_mapping(obj))
    if hasattr(obj, "_asdict"):
        return to_json(obj._asdict())
    if isinstance(obj, Mapping):
        if all(isinstance(k, str) for k in obj):
            return {k: to_json(v) for k, v in obj.items()}
        return [[_key(k), to_json(v)] for k, v in sorted(obj.items())]
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")


def _key(key):
    if isinstance(key, tuple):
        return list(key)
    return to_json(key)


def dumps(obj: Any, indent: Optional[int] = 2) -> str:
    """:func:`to_json` followed by :func:`json.dumps`, byte-identical across runs"""
    return json.dumps(to_json(obj), indent=indent, ensure_ascii=False)


__all__ = [
    "FORMAT_FUNCTIONS",
    "SCHEMAS",
    "SchemaRegistry",
    "Validator",
    "dumps",
    "load",
    "to_json",
]
