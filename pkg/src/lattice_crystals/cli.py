import argparse
import csv
import io
import logging
import sys
from contextlib import contextmanager
from itertools import chain
from textwrap import dedent, wrap
from typing import (
    Any,
    Callable,
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from . import __version__, limits
from .api import SchemaRegistry, Validator, dumps, to_json
from .charforms import (
    DominantWeight,
    character_weyl_via_crystal,
    dim_weyl,
    jacobi_trudi,
    nps,
    nps_from_character,
    ps_via_crystal,
    ps_weyl,
    spin_power_hankel_B,
    spin_power_multiplicity_B,
    spin_power_oracle_B,
    spin_rect_hankel,
    wedge_power_hankel_C,
    wedge_power_multiplicity_C,
    wedge_power_oracle_C,
)
from .crystal import FAMILIES
from .errors import (
    InvalidFamily,
    InvalidWord,
    OracleMismatch,
    ResourceCapExceeded,
    UnknownIdentity,
    ValidationError,
)
from .exactpoly import GroupAlgebraElement, LaurentPoly, normalize_valuation
from .identities import IdentityReport, Registry, load_builtin_registry, verify_many
from .kingtab import KingLetter, xi, xi_prime
from .paths import (
    enumerate_conjugate_partial_dyck,
    enumerate_partial_dyck,
    enumerate_motzkin,
    enumerate_rectangle,
    enumerate_riordan,
    path_statistics,
    rect_weight,
    tunnel_length,
)
from .plugins import PluginWrapper
from .plugins import list_from_entry_points as list_plugins_from_entry_points

_logger = logging.getLogger(__package__)

_EXIT_CODES: Tuple[Tuple[Any, int], ...] = (
    (ResourceCapExceeded, 3),
    (OracleMismatch, 4),
    ((ValidationError, UnknownIdentity, ValueError), 2),
)


@contextmanager
def critical_logging():
    """Make sure the logging level is set even before parsing the CLI args"""
    try:
        yield
    except Exception:  # pragma: no cover
        if "-vv" in sys.argv or "--very-verbose" in sys.argv:
            setup_logging(logging.DEBUG)
        raise


def _int_list(text: str) -> Tuple[int, ...]:
    """``"0,2"`` -> ``(0, 2)``"""
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}"
        ) from None


META: Dict[str, dict] = {
    "format": dict(
        flags=("--format",),
        choices=("json", "csv", "pretty"),
        default="pretty",
        help="output format (default: %(default)s)",
    ),
    "cap": dict(
        flags=("--cap",),
        type=int,
        help="maximal number of objects a single enumeration may produce\n"
        f"(default: ${limits.CAP_ENV_VAR} or {limits.DEFAULT_CAP})",
    ),
    "seed": dict(
        flags=("--seed",),
        type=int,
        help="seed used when sampling identity instances",
    ),
    "oracle": dict(
        flags=("--oracle",),
        action="store_true",
        help="cross-check determinant results by crystal enumeration",
    ),
    "output": dict(
        flags=("-o", "--output"),
        type=argparse.FileType("w", encoding="utf-8"),
        help="write the result to the given file (`stdout` by default)",
    ),
    "verbose": dict(
        flags=("-v", "--verbose"),
        dest="loglevel",
        action="store_const",
        const=logging.INFO,
        help="set logging level to INFO",
    ),
    "very_verbose": dict(
        flags=("-vv", "--very-verbose"),
        dest="loglevel",
        action="store_const",
        const=logging.DEBUG,
        help="set logging level to DEBUG",
    ),
}

_FAMILY = dict(dest="family", choices=FAMILIES, help="Cartan family")
_RANK = dict(dest="rank", type=int, help="rank of the Cartan type")
_WEIGHT = ("weight", True)
_TENSOR = ("tensor", True)
_PROFILE = ("profile", False)

_IDENTITY_SELECTION: Dict[str, dict] = {
    "bound": dict(
        flags=("--n",),
        dest="bound",
        type=int,
        help="check every instance up to this bound\n"
        "(default: the bound of the selected profile)",
    ),
    "small": dict(
        flags=("--small",),
        dest="profile",
        action="store_const",
        const="small",
        group=_PROFILE,
        help="use the small default bounds",
    ),
    "full": dict(
        flags=("--full",),
        dest="profile",
        action="store_const",
        const="full",
        group=_PROFILE,
        help="use the full default bounds",
    ),
    "sample": dict(
        flags=("--sample",),
        type=int,
        help="check only this many instances, drawn with --seed",
    ),
    "jobs": dict(
        flags=("-j", "--jobs"),
        type=int,
        default=1,
        help="number of worker processes per identity (default: %(default)s)",
    ),
    "list": dict(
        flags=("--list",),
        dest="list_only",
        action="store_true",
        help="list the available names and exit",
    ),
    "enable": dict(
        flags=("-E", "--enable-plugins"),
        nargs="+",
        default=(),
        dest="enable",
        metavar="PLUGINS",
        help="Enable ONLY the given plugins (ALL plugins are enabled by default).",
    ),
    "disable": dict(
        flags=("-D", "--disable-plugins"),
        nargs="+",
        dest="disable",
        default=(),
        metavar="PLUGINS",
        help="Enable ALL plugins, EXCEPT the ones given.",
    ),
}

SUBCOMMANDS: Dict[str, Tuple[str, Dict[str, dict]]] = {
    "char": (
        "dimension, principal specialization or character of V(lambda)",
        {
            "family": _FAMILY,
            "rank": _RANK,
            "fund": dict(
                flags=("--fund",),
                dest="fundamental",
                type=_int_list,
                group=_WEIGHT,
                metavar="LIST",
                help="lambda by its coefficients on the fundamental weights",
            ),
            "partition": dict(
                flags=("--partition",),
                type=_int_list,
                group=_WEIGHT,
                metavar="LIST",
                help="lambda by its epsilon coordinates",
            ),
            "mode": dict(
                flags=("--mode",),
                choices=("dim", "ps", "nps", "character"),
                default="dim",
                help="what to compute (default: %(default)s)",
            ),
            "method": dict(
                flags=("--method",),
                choices=("weyl", "crystal", "determinant"),
                default="weyl",
                help="product formulas, crystal enumeration or the type C\n"
                "Jacobi-Trudi determinant (default: %(default)s)",
            ),
        },
    ),
    "mult": (
        "tensor power multiplicities as determinants of Catalan numbers",
        {
            "family": _FAMILY,
            "rank": _RANK,
            "spin_power": dict(
                flags=("--spin-power",),
                type=int,
                group=_TENSOR,
                metavar="P",
                help="B(omega_n)^(P) in type B_n (P even)",
            ),
            "wedge_power": dict(
                flags=("--wedge-power",),
                type=int,
                group=_TENSOR,
                metavar="M",
                help="(wedge B(omega_1))^(M) in type C_n",
            ),
            "spin_rect": dict(
                flags=("--spin-rect",),
                type=int,
                group=_TENSOR,
                metavar="R",
                help="dimension of V(R tfw_n) in type B_n as a Hankel determinant",
            ),
            "target": dict(
                flags=("--target",),
                type=_int_list,
                metavar="LIST",
                help="fundamental coefficients of the highest weight whose\n"
                "multiplicity is computed (default: the zero weight)",
            ),
        },
    ),
    "paths": (
        "list lattice words, their statistics and King columns",
        {
            "kind": dict(
                dest="kind", choices=("dyck", "motzkin", "riordan", "rectangle")
            ),
            "n": dict(dest="n", type=int, help="letters E (dyck), or the length"),
            "k": dict(
                dest="k",
                type=int,
                nargs="?",
                help="letters N (dyck, default N), letters E (rectangle)\n"
                "or the final height (motzkin, riordan, default 0)",
            ),
            "triangle": dict(
                flags=("--triangle",),
                type=int,
                metavar="K",
                help="same as the positional K",
            ),
            "stats": dict(
                flags=("--stats",),
                action="store_true",
                help="print the statistics of every word",
            ),
            "bijection": dict(
                flags=("--bijection",),
                choices=("xi", "xi-prime"),
                help="print the King column of every word",
            ),
            "word": dict(
                flags=("--word",),
                help="apply --bijection to this word only",
            ),
        },
    ),
    "verify": (
        "check named identities on finite ranges",
        {
            "names": dict(
                dest="names",
                nargs="*",
                default=["all"],
                metavar="NAME",
                help="identities to check (default: all)",
            ),
            **_IDENTITY_SELECTION,
        },
    ),
    "scan": (
        "scan conjectures for counterexamples on finite ranges",
        {
            "names": dict(
                dest="names",
                nargs="*",
                default=["all"],
                metavar="NAME",
                help="conjectures to scan (default: all)",
            ),
            **_IDENTITY_SELECTION,
        },
    ),
}


class CliParams(NamedTuple):
    command: str
    options: Dict[str, Any]
    plugins: List[PluginWrapper]
    format: str = "pretty"
    cap: Optional[int] = None
    seed: Optional[int] = None
    oracle: bool = False
    output: Optional[io.TextIOBase] = None
    loglevel: int = logging.WARNING


def _add_arguments(parser: argparse.ArgumentParser, spec: Dict[str, dict]):
    groups: Dict[str, Any] = {}
    for cli_opts in spec.values():
        opts = dict(cli_opts)
        flags = opts.pop("flags", ())
        group = opts.pop("group", None)
        target: Any = parser
        if group:
            name, required = group
            if name not in groups:
                groups[name] = parser.add_mutually_exclusive_group(required=required)
            target = groups[name]
        target.add_argument(*flags, **opts)


@critical_logging()
def parse_args(
    args: Sequence[str],
    plugins: Sequence[PluginWrapper],
    description: str = "Representation theory of lattice paths and crystals",
) -> CliParams:
    """Parse command line parameters

    Args:
      args: command line parameters as list of strings (for example  ``["--help"]``).

    Returns: command line parameters namespace
    """
    epilog = ""
    if plugins:
        epilog = f"The following plugins are available:\n\n{plugins_help(plugins)}"

    common = argparse.ArgumentParser(add_help=False)
    _add_arguments(common, META)
    common.set_defaults(loglevel=logging.WARNING)

    parser = argparse.ArgumentParser(description=description, formatter_class=Formatter)
    parser.add_argument(
        "-V", "--version", action="version", version=f"{__package__} {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command, (help_text, spec) in SUBCOMMANDS.items():
        subparser = subparsers.add_parser(
            command,
            help=help_text,
            description=help_text.capitalize(),
            epilog=epilog if command in ("verify", "scan") else None,
            parents=[common],
            formatter_class=Formatter,
        )
        _add_arguments(subparser, spec)

    params = vars(parser.parse_args(args))
    common_fields = {k: params.pop(k) for k in CliParams._fields if k in params}
    enabled = params.pop("enable", ())
    disabled = params.pop("disable", ())
    selected = select_plugins(plugins, enabled, disabled)
    return CliParams(options=params, plugins=selected, **common_fields)


def select_plugins(
    plugins: Sequence[PluginWrapper],
    enabled: Sequence[str] = (),
    disabled: Sequence[str] = (),
) -> List[PluginWrapper]:
    available = list(plugins)
    if enabled:
        available = [p for p in available if p.name in enabled]
    if disabled:
        available = [p for p in available if p.name not in disabled]
    return available


def setup_logging(loglevel: int):
    """Setup basic logging

    Args:
      loglevel: minimum loglevel for emitting messages
    """
    logformat = "[%(levelname)s] %(message)s"
    logging.basicConfig(level=loglevel, stream=sys.stderr, format=logformat)


@contextmanager
def exceptions2exit():
    try:
        yield
    except Exception as ex:
        for kinds, code in _EXIT_CODES:
            if isinstance(ex, kinds):
                _logger.error(str(ex))
                raise SystemExit(code)
        _logger.error(f"{ex.__class__.__name__}: {ex}\n")
        _logger.debug("Please check the following information:", exc_info=True)
        raise SystemExit(1)


# ---- results -------------------------------------------------------------------


class Result(NamedTuple):
    """What a subcommand produces, independently of the output format"""

    schema: Optional[str]
    data: Any
    rows: List[List[Any]]
    text: str
    many: bool = False
    status: int = 0


def _weight(options: Dict[str, Any]) -> DominantWeight:
    family, rank = options["family"], options["rank"]
    if options.get("partition") is not None:
        return DominantWeight.from_partition(family, rank, options["partition"])
    return DominantWeight.from_fundamental(family, rank, options["fundamental"])


def _doubled(element: GroupAlgebraElement, size: int) -> Dict[tuple, int]:
    """Integral exponent vectors as doubled weights"""
    return {
        tuple(2 * x for x in key): mult for key, mult in element.as_dict(size).items()
    }


def _character_value(weight: DominantWeight, mode: str, method: str):
    cartan = weight.cartan
    if method == "determinant":
        if mode == "dim":
            return jacobi_trudi(weight, "dimension")
        if mode == "character":
            return _doubled(jacobi_trudi(weight, "character"), cartan.dimension)
        ps = jacobi_trudi(weight, "q")
        return ps if mode == "ps" else normalize_valuation(ps)[1]
    if method == "weyl" and mode != "character":
        return {"dim": dim_weyl, "ps": ps_weyl, "nps": nps}[mode](weight)
    character = character_weyl_via_crystal(weight)
    if mode == "dim":
        return sum(character.values())
    if mode == "ps":
        return ps_via_crystal(weight)
    if mode == "nps":
        return nps_from_character(cartan, character)
    return character


def _value_rows(value) -> List[List[Any]]:
    if isinstance(value, LaurentPoly):
        return [["exponent", "coefficient"], *([e, c] for e, c in value.terms())]
    if isinstance(value, dict):
        return [[*weight, mult] for weight, mult in sorted(value.items())]
    return [[value]]


def _value_text(value) -> str:
    if isinstance(value, dict):
        return "\n".join(f"{w}: {m}" for w, m in sorted(value.items()))
    return str(value)


def cmd_char(params: CliParams) -> Result:
    options = params.options
    weight = _weight(options)
    mode, method = options["mode"], options["method"]
    value = _character_value(weight, mode, method)
    if params.oracle:
        expected = _character_value(weight, mode, "crystal")
        if value != expected:
            raise OracleMismatch(str(weight), method, value, expected)
        _logger.info(f"{mode} of {weight} agrees with the crystal")
    data = {
        "family": weight.cartan.family,
        "rank": weight.cartan.rank,
        "fundamental": list(weight.fundamental),
        "mode": mode,
        "method": method,
        "value": value,
    }
    return Result("character", data, _value_rows(value), _value_text(value))


def _tensor(options: Dict[str, Any]) -> Tuple[str, int]:
    for kind in ("spin_power", "wedge_power", "spin_rect"):
        if options.get(kind) is not None:
            return kind.replace("_", "-"), options[kind]
    raise ValueError("one of --spin-power, --wedge-power or --spin-rect is required")


_TENSOR_FAMILY = {"spin-power": "B", "wedge-power": "C", "spin-rect": "B"}


def _target(family: str, rank: int, coefficients) -> DominantWeight:
    coefficients = tuple(coefficients or ())
    if len(coefficients) > rank:
        raise ValueError(f"--target has more than {rank} coefficients")
    padded = coefficients + (0,) * (rank - len(coefficients))
    return DominantWeight.from_fundamental(family, rank, padded)


def _multiplicity(kind: str, power: int, rank: int, target: Optional[DominantWeight]):
    """``(value, method, oracle)`` with the oracle computed lazily"""
    if power < 0:
        raise ValueError(f"the power must be nonnegative, got {power}")
    if kind == "spin-rect":
        if target is not None:
            raise ValueError("--spin-rect does not take a --target")
        coefficients = (0,) * (rank - 1) + (2 * power,)
        last = DominantWeight.from_fundamental("B", rank, coefficients)
        return spin_rect_hankel(power, rank), "hankel", lambda: dim_weyl(last)

    if kind == "spin-power":
        if power % 2:
            raise ValueError(f"--spin-power must be even, got {power}")
        m, oracle_fn = power // 2, spin_power_oracle_B
    else:
        m, oracle_fn = power, wedge_power_oracle_C
    assert target is not None
    if not any(target.fundamental):
        if kind == "spin-power":
            value = spin_power_hankel_B(rank, m)
        else:
            value = wedge_power_hankel_C(rank, m)
        method = "hankel"
    else:
        det = (
            spin_power_multiplicity_B
            if kind == "spin-power"
            else wedge_power_multiplicity_C
        )
        value, method = det(target, m), "determinant"
    return value, method, lambda: oracle_fn(rank, m).get(target.weight, 0)


def cmd_mult(params: CliParams) -> Result:
    options = params.options
    family, rank = options["family"], options["rank"]
    kind, power = _tensor(options)
    if family != _TENSOR_FAMILY[kind]:
        raise InvalidFamily(family, rank, f"--{kind}")
    target = None
    if kind != "spin-rect" or options.get("target") is not None:
        target = _target(family, rank, options.get("target"))
    value, method, oracle = _multiplicity(kind, power, rank, target)
    data: Dict[str, Any] = {
        "family": family,
        "rank": rank,
        "tensor": {"kind": kind, "power": power},
        "target": list(target.fundamental) if target else None,
        "method": method,
        "value": value,
    }
    rows = [["value", value]]
    text = str(value)
    if params.oracle:
        expected = oracle()
        if expected != value:
            subject = f"{kind} {power} of {family}{rank}"
            raise OracleMismatch(subject, method, value, expected)
        data["oracle"] = expected
        rows.append(["oracle", expected])
        text += f"\noracle: {expected}"
    return Result("multiplicity", data, rows, text)


def _letters(column) -> str:
    """Pretty King letters, barred with a combining macron"""
    shown = (KingLetter.from_signed(x) for x in column)
    return ",".join(f"{x.value}̄" if x.barred else str(x.value) for x in shown)


def _words(kind: str, n: int, k: int, bijection: Optional[str]) -> List[str]:
    if kind == "dyck":
        if bijection == "xi-prime":
            return enumerate_conjugate_partial_dyck(n, k)
        return enumerate_partial_dyck(n, k)
    if kind == "rectangle":
        return enumerate_rectangle(n, k)
    if kind == "motzkin":
        return enumerate_motzkin(n, k)
    return enumerate_riordan(n, k)


def _statistics(kind: str, word: str, n: int, k: int) -> Dict[str, Any]:
    if kind == "dyck":
        return path_statistics(word)._asdict()
    if kind == "rectangle":
        return {"weight": rect_weight(word, n, k)}
    return {"tunnel": tunnel_length(word)}


def _bijection_result(bijection: str, words: Sequence[str]) -> Result:
    apply = xi if bijection == "xi" else xi_prime
    pairs = [(word, apply(word)) for word in words]
    data = [
        {"bijection": bijection, "word": word, "column": ",".join(map(str, column))}
        for word, column in pairs
    ]
    rows = [["word", "column"], *([w, ",".join(map(str, c))] for w, c in pairs)]
    text = "\n".join(f"{w} -> ({_letters(c)})" for w, c in pairs)
    return Result("tableau", data, rows, text, many=True)


def cmd_paths(params: CliParams) -> Result:
    options = params.options
    kind, n, bijection = options["kind"], options["n"], options["bijection"]
    k = options["k"] if options.get("triangle") is None else options["triangle"]
    if k is None:
        if kind == "rectangle":
            raise ValueError("rectangle listings need both N and K")
        k = n if kind == "dyck" else 0
    if bijection and kind != "dyck":
        raise ValueError(f"--bijection applies to dyck words, not {kind}")

    word = options.get("word")
    if word is not None:
        if not bijection:
            raise ValueError("--word needs --bijection")
        if (word.count("E"), word.count("N")) != (n, k):
            raise InvalidWord(word, f"word with {n} letters E and {k} letters N")
        result = _bijection_result(bijection, [word])
        return result._replace(data=result.data[0], many=False)

    words = _words(kind, n, k, bijection)
    _logger.info(f"{len(words)} {kind} words")
    if bijection:
        return _bijection_result(bijection, words)

    stats = (
        [_statistics(kind, w, n, k) for w in words] if options["stats"] else None
    )
    entries: List[Dict[str, Any]] = [{"word": w} for w in words]
    if stats:
        for entry, stat in zip(entries, stats):
            entry["statistics"] = stat
    data = {
        "kind": kind,
        "parameters": {"n": n, "k": k},
        "count": len(words),
        "words": entries,
    }
    if stats:
        header = ["word", *stats[0]]
        rows = [header, *([w, *map(_cell, s.values())] for w, s in zip(words, stats))]
        text = "\n".join(
            f"{w} " + " ".join(f"{key}={_cell(v)}" for key, v in s.items())
            for w, s in zip(words, stats)
        )
    else:
        rows = [[w] for w in words]
        text = "\n".join(words)
    return Result("word_listing", data, rows, text)


def _cell(value) -> str:
    if isinstance(value, tuple):
        return " ".join(map(str, value))
    return str(value)


def load_registry(plugins: Sequence[PluginWrapper]) -> Registry:
    """Built-in and plugin identities; the built-in ones are always available,
    even when the package metadata is missing"""
    if not any(p.name == "builtin" for p in plugins):
        _logger.debug("Using the built-in identities without entry points")
        plugins = [PluginWrapper("builtin", load_builtin_registry), *plugins]
    return Registry.from_plugins(plugins)


def _report_rows(reports: Sequence[IdentityReport]) -> List[List[Any]]:
    rows: List[List[Any]] = [["name", "kind", "bound", "checked", "status"]]
    for report in reports:
        bound = "" if report.bound is None else report.bound
        rows.append(
            [report.name, report.kind, bound, report.checked, report.status.value]
        )
    return rows


def _run_identities(params: CliParams, kind: str) -> Result:
    options = params.options
    registry = load_registry(params.plugins)
    names = list(options["names"])
    if options["list_only"]:
        listed = registry.of_kind(kind)
        text = "\n".join(f"{x.name}: {x.description}" for x in listed)
        rows = [[x.name, x.description] for x in listed]
        data = [{"name": x.name, "description": x.description} for x in listed]
        return Result(None, data, rows, text)

    selected = registry.of_kind(kind) if names == ["all"] else registry.select(names)
    reports = verify_many(
        selected, options["bound"], options["jobs"], options["sample"]
    )
    failed = [r.name for r in reports if not r.ok]
    if failed:
        _logger.warning(f"Failed: {', '.join(failed)}")
    text = "\n".join(report.summary() for report in reports)
    status = 1 if failed and kind == "identity" else 0
    return Result(
        "identity_report", reports, _report_rows(reports), text, True, status
    )


def cmd_verify(params: CliParams) -> Result:
    return _run_identities(params, "identity")


def cmd_scan(params: CliParams) -> Result:
    """Conjecture scans only report: a counterexample never changes the exit code"""
    return _run_identities(params, "scan")


COMMANDS: Dict[str, Callable[[CliParams], Result]] = {
    "char": cmd_char,
    "mult": cmd_mult,
    "paths": cmd_paths,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def emit(result: Result, output_format: str, stream: io.TextIOBase):
    if output_format == "json":
        data = to_json(result.data)
        if result.schema:
            validator = Validator(result.schema, registry=SchemaRegistry())
            for item in data if result.many else [data]:
                validator(item)
        stream.write(dumps(data) + "\n")
    elif output_format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerows(result.rows)
    elif result.text:
        stream.write(result.text + "\n")


def run(args: Sequence[str] = ()):
    """Wrapper allowing the subcommands to be called in a CLI fashion.

    The result of the subcommand is printed in the requested format to the given
    ``--output`` file or ``stdout``.

    Args:
      args (List[str]): command line parameters as list of strings
          (for example  ``["char", "C", "2", "--fund", "0,2"]``).
    """
    args = args or sys.argv[1:]
    plugins: List[PluginWrapper] = list_plugins_from_entry_points()
    params: CliParams = parse_args(args, plugins)
    setup_logging(params.loglevel)
    with limits.override(cap=params.cap, seed=params.seed, profile=_profile(params)):
        result = COMMANDS[params.command](params)
    emit(result, params.format, params.output or sys.stdout)
    if params.output:
        params.output.close()
    return result.status


def _profile(params: CliParams) -> Optional[str]:
    return params.options.get("profile")


main = exceptions2exit()(run)


class Formatter(argparse.RawTextHelpFormatter):
    # Since the stdlib does not specify what is the signature we need to implement in
    # order to create our own formatter, we are left no choice other then overwrite a
    # "private" method considered to be an implementation detail.

    def _split_lines(self, text, width):
        return list(chain.from_iterable(wrap(x, width) for x in text.splitlines()))


def plugins_help(plugins: Sequence[PluginWrapper]) -> str:
    return "\n".join(_format_plugin_help(p) for p in plugins)


def _flatten_str(text: str) -> str:
    text = " ".join(x.strip() for x in dedent(text).splitlines()).strip()
    text = text.rstrip(".,;").strip()
    return (text[0].lower() + text[1:]).strip()


def _format_plugin_help(plugin: PluginWrapper) -> str:
    help_text = plugin.help_text
    help_text = f": {_flatten_str(help_text)}" if help_text else ""
    return f'* "{plugin.name}"{help_text}'

