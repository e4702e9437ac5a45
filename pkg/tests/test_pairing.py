import pytest

from core.errors import InputTooLargeError, InvalidExampleError
from core.pairing import decode_point, encode_point, pair_decode, pair_encode, zigzag_decode, zigzag_encode


def test_pair_encode_examples() -> None:
    assert pair_encode(0, 0) == 0
    assert pair_encode(1, 1) == 4
    assert pair_encode(0, 1) == 2
    assert pair_encode(1, 0) == 1


def test_pair_decode_examples() -> None:
    assert pair_decode(0) == (0, 0)
    assert pair_decode(4) == (1, 1)
    assert pair_decode(7) == (2, 1)


def test_pairing_is_a_bijection_on_small_codes() -> None:
    seen = set()
    for code in range(10 ** 4 + 1):
        pair = pair_decode(code)
        assert pair_encode(*pair) == code
        seen.add(pair)
    assert len(seen) == 10 ** 4 + 1


def test_pairing_is_strictly_monotone_in_both_arguments() -> None:
    for a in range(101):
        for b in range(101):
            code = pair_encode(a, b)
            assert pair_encode(a + 1, b) > code
            assert pair_encode(a, b + 1) > code


def test_pair_encode_dominates_first_argument() -> None:
    for a in range(10 ** 3 + 1):
        assert pair_encode(a, 0) >= a


def test_pair_encode_rejects_bad_input() -> None:
    with pytest.raises(InvalidExampleError):
        pair_encode(-1, 0)
    with pytest.raises(InvalidExampleError):
        pair_decode(-3)
    with pytest.raises(InputTooLargeError):
        pair_encode(2 ** 32, 2 ** 32)


def test_zigzag_and_points() -> None:
    assert [zigzag_encode(v) for v in (0, -1, 1, -2, 2)] == [0, 1, 2, 3, 4]
    for value in range(-50, 51):
        assert zigzag_decode(zigzag_encode(value)) == value
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert decode_point(encode_point(x, y)) == (x, y)
    assert encode_point(-1, 0) == 1
    assert encode_point(32, 32) == 8320
