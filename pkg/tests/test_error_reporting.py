import logging
from inspect import cleandoc

import pytest
from fastjsonschema import validate

from lattice_crystals.api import FORMAT_FUNCTIONS
from lattice_crystals.error_reporting import ValidationError, detailed_errors

EXAMPLES = {
    "enum": {
        "schema": {"enum": ["dyck", "motzkin"]},
        "value": "catalan",
        "message": "`data` must be one of ['dyck', 'motzkin']",
        "debug_info": "**SKIP-TEST**",
    },
    "nested": {
        "schema": {"properties": {"count": {"type": "string"}}},
        "value": {"count": 42},
        "message": "`count` must be string",
        "debug_info": """
            GIVEN VALUE:
                42

            OFFENDING RULE: 'type'

            DEFINITION:
                {
                    "type": "string"
                }
        """,
    },
    "oneOf": {
        "schema": {
            "oneOf": [
                {"type": "string", "format": "decimal-integer"},
                {"type": "null"},
            ]
        },
        "value": "12a",
        "message": "**SKIP-TEST**",
        "debug_info": """
            GIVEN VALUE:
                "12a"

            OFFENDING RULE: 'oneOf'
        """,
    },
}


@pytest.mark.parametrize("example", EXAMPLES.keys())
def test_error_reporting(caplog, example):
    schema = EXAMPLES[example]["schema"]
    value = EXAMPLES[example]["value"]
    message = cleandoc(EXAMPLES[example]["message"])
    debug_info = cleandoc(EXAMPLES[example]["debug_info"])

    with pytest.raises(ValidationError) as exc:
        with caplog.at_level(logging.CRITICAL), detailed_errors():
            validate(schema, value, formats=FORMAT_FUNCTIONS)
    ex = exc.value
    if message != "**SKIP-TEST**":
        assert ex.message.strip() == message
    assert ex.message == ex.summary
    assert "GIVEN VALUE:" in ex.details
    assert "DEFINITION:" in ex.details

    with pytest.raises(ValidationError) as exc:
        with caplog.at_level(logging.DEBUG), detailed_errors():
            validate(schema, value, formats=FORMAT_FUNCTIONS)
    ex = exc.value
    assert "GIVEN VALUE:" in ex.message
    assert "DEFINITION:" in ex.message
    assert ex.summary in ex.message
    if debug_info != "**SKIP-TEST**":
        assert debug_info in ex.details


def test_other_errors_pass_through():
    with pytest.raises(ZeroDivisionError):
        with detailed_errors():
            1 / 0
