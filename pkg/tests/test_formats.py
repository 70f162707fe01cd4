import pytest

from lattice_crystals import api, formats


@pytest.mark.parametrize("example", ["0", "-7", "42", "1" + "0" * 40])
def test_valid_decimal_integer(example):
    assert formats.decimal_integer(example)


@pytest.mark.parametrize("example", ["", "01", "-0x1", "1.0", " 3", "+3", "1e3"])
def test_invalid_decimal_integer(example):
    assert formats.decimal_integer(example) is False


@pytest.mark.parametrize("example", ["", "EENN", "NE", "UHD", "UUHDD"])
def test_valid_step_word(example):
    assert formats.step_word(example)


@pytest.mark.parametrize("example", ["EU", "enen", "E N", "UHDE"])
def test_invalid_step_word(example):
    assert formats.step_word(example) is False


@pytest.mark.parametrize("example", ["", "1", "-1,-2,3,-4", "0,-12"])
def test_valid_signed_letter_word(example):
    assert formats.signed_letter_word(example)


@pytest.mark.parametrize("example", ["1,", ",1", "1;2", "2bar", "1, 2"])
def test_invalid_signed_letter_word(example):
    assert formats.signed_letter_word(example) is False


def test_public_functions_are_formats():
    assert set(api.FORMAT_FUNCTIONS) == {
        "decimal-integer",
        "step-word",
        "signed-letter-word",
    }
    assert api.FORMAT_FUNCTIONS["step-word"] is formats.step_word
