import json
import logging
from contextlib import contextmanager
from textwrap import indent

from fastjsonschema import JsonSchemaValueException

_logger = logging.getLogger(__name__)

_MESSAGE_REPLACEMENTS = {
    "must be named by propertyName definition": "keys must be named by",
    "one of contains definition": "at least one item that matches",
    " same as const definition:": "",
    "only specified items": "only items matching the definition",
}


class ValidationError(JsonSchemaValueException):
    """Report output that violates one of the documented JSON schemas.

    This class extends :exc:`~fastjsonschema.JsonSchemaValueException`
    by adding the following properties:

    - ``summary``: a shorter version of the ``JsonSchemaValueException`` message
    - ``details``: the failing definition and the offending value.

    The exception message is only the ``summary`` unless the logging level is
    :obj:`logging.DEBUG`, in which case ``details`` is appended.
    """

    summary = ""
    details = ""

    @classmethod
    def _from_jsonschema(cls, ex: JsonSchemaValueException):
        name = ex.name[len("data.") :] if ex.name.startswith("data.") else ex.name
        summary = ex.message.replace(ex.name, f"`{name}`")
        for bad, repl in _MESSAGE_REPLACEMENTS.items():
            summary = summary.replace(bad, repl)

        details = "\n\n".join(
            [
                f"GIVEN VALUE:\n{indent(json.dumps(ex.value, indent=4), '    ')}",
                f"OFFENDING RULE: {ex.rule!r}",
                f"DEFINITION:\n{indent(json.dumps(ex.definition, indent=4), '    ')}",
            ]
        )
        message = summary
        if _logger.getEffectiveLevel() <= logging.DEBUG:
            message = f"{summary}\n\n{details}"

        obj = cls(message, ex.value, name, ex.definition, ex.rule)
        obj.summary = summary
        obj.details = details
        return obj


@contextmanager
def detailed_errors():
    try:
        yield
    except JsonSchemaValueException as ex:
        raise ValidationError._from_jsonschema(ex) from None
