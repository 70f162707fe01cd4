"""
Custom ``format`` validators for the output JSON schemas. Every public function
takes a string and returns ``True`` if it satisfies the format named after it
(with ``_`` replaced by ``-``).
"""
import logging
import re

_logger = logging.getLogger(__name__)

DECIMAL_INTEGER_REGEX = re.compile(r"^-?(0|[1-9][0-9]*)$")
LATTICE_WORD_REGEX = re.compile(r"^[NE]*$")
MOTZKIN_WORD_REGEX = re.compile(r"^[UHD]*$")
SIGNED_LETTER_WORD_REGEX = re.compile(r"^(-?[0-9]+(,-?[0-9]+)*)?$")


def decimal_integer(value: str) -> bool:
    """Integers are serialized as decimal strings, so they are never truncated"""
    return DECIMAL_INTEGER_REGEX.match(value) is not None


def step_word(value: str) -> bool:
    """A word over ``{N, E}`` or over ``{U, H, D}``"""
    return bool(LATTICE_WORD_REGEX.match(value) or MOTZKIN_WORD_REGEX.match(value))


def signed_letter_word(value: str) -> bool:
    """Comma separated signed letters, e.g. ``-1,-2,3,-4`` for a column
    ``1bar 2bar 3 4bar``"""
    return SIGNED_LETTER_WORD_REGEX.match(value) is not None
