import pytest

from weakcover import is_integral, parse_rat, rat, rat_str
from weakcover.rational import RAT_ONE, RAT_ZERO, ceil_rat


def test_wire_form():
    assert rat_str(rat(5, 2)) == "5/2"
    assert rat_str(rat(3)) == "3"
    assert rat_str(rat(-7, 3)) == "-7/3"
    assert rat_str(rat(4, 2)) == "2"


def test_parse_inverts_emit():
    for value in (rat(0), rat(5, 2), rat(-1, 3), rat(12)):
        assert parse_rat(rat_str(value)) == value


def test_parse_tolerates_whitespace():
    assert parse_rat(" 5/2 ") == rat(5, 2)


def test_is_integral():
    assert is_integral(rat(4, 2))
    assert not is_integral(rat(1, 2))
    assert is_integral(RAT_ZERO) and is_integral(RAT_ONE)


@pytest.mark.parametrize(
    "num,den,expected",
    [(7, 2, 4), (-1, 2, 0), (3, 1, 3), (-7, 2, -3), (0, 5, 0)],
)
def test_ceil(num, den, expected):
    assert ceil_rat(rat(num, den)) == expected


def test_exact_arithmetic():
    third = rat(1, 3)
    assert third + third + third == RAT_ONE
