import pytest

from lattice_crystals import errors
from lattice_crystals.exactpoly import Q


@pytest.mark.parametrize(
    "error, kinds",
    [
        (errors.InvalidWord("NE", "Dyck word"), (ValueError,)),
        (errors.InvalidWeight((1, 0), "C", 2, "not dominant"), (ValueError,)),
        (errors.InvalidFamily("G", 2, "dim_weyl"), (ValueError,)),
        (errors.InexactDivision(Q, Q + 1, 1), (ArithmeticError,)),
        (errors.ZeroValuation(), (ArithmeticError,)),
        (errors.UnknownIdentity("nope"), (KeyError,)),
        (errors.ResourceCapExceeded("Dyck_(9,9)", 4862, 10), ()),
        (errors.ErrorLoadingPlugin("mine"), (RuntimeError,)),
    ],
)
def test_hierarchy(error, kinds):
    assert isinstance(error, errors.LatticeCrystalsError)
    for kind in kinds:
        assert isinstance(error, kind)


def test_messages():
    assert str(errors.InvalidWord("NE", "Dyck word")) == (
        "The word 'NE' is not a valid Dyck word."
    )
    assert "type C_2" in str(errors.InvalidWeight((1, 0), "C", 2, "not dominant"))
    assert str(errors.InvalidFamily("G", 2, "dim_weyl")) == (
        "Type G_2 is not supported by dim_weyl."
    )
    assert str(errors.ZeroValuation()) == (
        "The valuation of the zero polynomial is undefined."
    )


def test_unknown_identity_is_not_quoted():
    # KeyError would otherwise wrap the message in quotes
    message = str(errors.UnknownIdentity("nope"))
    assert message.startswith("No identity named 'nope'")
    assert "verify --list" in message


def test_oracle_mismatch():
    error = errors.OracleMismatch("C2", "hankel", 2, 3)
    assert (error.value, error.expected) == (2, 3)
    assert "crystal oracle counts 3" in str(error)
