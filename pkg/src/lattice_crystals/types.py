from typing import Any, Callable, Iterable, List, Mapping, NewType, Sequence, Tuple

Weight = Tuple[int, ...]
"""Weight in doubled ``epsilon`` coordinates: entry ``i`` is twice the coefficient
of ``epsilon_(i+1)``, so spin weights stay integral.
"""

SignedLetter = int
"""Letter of the vector representation: ``k`` for an unbarred letter, ``-k`` for
``kbar`` and ``0`` for the extra letter of type ``B_n``.
"""

Partition = Tuple[int, ...]
"""Weakly decreasing tuple of positive integers"""

RingMatrix = List[List[Any]]
"""Square matrix whose entries share a common ring
(``int``, :class:`~lattice_crystals.exactpoly.LaurentPoly`, ...)
"""

Schema = NewType("Schema", Mapping)
"""JSON Schema represented as a Python dict"""

FormatValidationFn = Callable[[str], bool]
"""Should return ``True`` when the input string satisfies the format"""

IdentityLoader = Callable[[], Iterable[Any]]
"""An identity plugin: a callable without arguments returning an iterable of
:class:`~lattice_crystals.identities.Identity` entries.

For example the built-in ``load_builtin_registry()`` returns every identity shipped
with ``lattice-crystals``.
"""

Counterexample = Mapping[str, Any]
"""Parameters and both sides of a failed identity instance"""

Column = Sequence[SignedLetter]
"""Column of a tableau listed from top to bottom"""
