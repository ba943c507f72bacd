import random

import pytest

from primesums.arith import (
    UINT64_MAX,
    UINT128_MAX,
    checked_pow,
    integer_kth_root,
)


def test_checked_pow_basic():
    assert checked_pow(7, 3) == 343
    assert checked_pow(2, 10) == 1024
    assert checked_pow(0, 5) == 0
    for k in (1, 2, 17, 128):
        assert checked_pow(1, k) == 1


def test_checked_pow_overflow_names_operands():
    with pytest.raises(OverflowError) as info:
        checked_pow(2 ** 13, 10)  # 2^130
    message = str(info.value)
    assert "8192" in message and "10" in message


def test_checked_pow_boundaries():
    assert checked_pow(2, 127) == 2 ** 127
    with pytest.raises(OverflowError):
        checked_pow(2, 128)
    with pytest.raises(OverflowError):
        checked_pow(3, 200)
    assert checked_pow(UINT64_MAX, 2) < UINT128_MAX


def test_checked_pow_rejects_bad_domain():
    with pytest.raises(ValueError):
        checked_pow(-2, 3)
    with pytest.raises(ValueError):
        checked_pow(UINT64_MAX + 1, 2)
    with pytest.raises(ValueError):
        checked_pow(2, 0)


def test_root_examples():
    assert integer_kth_root(1000, 3) == 10
    assert integer_kth_root(10 ** 38, 20) == 79
    assert checked_pow(79, 20) <= 10 ** 38 < checked_pow(80, 20)
    assert integer_kth_root(0, 7) == 0
    assert integer_kth_root(1, 7) == 1
    assert integer_kth_root(12345, 1) == 12345
    assert integer_kth_root(UINT128_MAX, 127) == 2


def test_root_rejects_bad_domain():
    with pytest.raises(ValueError):
        integer_kth_root(-1, 2)
    with pytest.raises(ValueError):
        integer_kth_root(UINT128_MAX + 1, 2)
    with pytest.raises(ValueError):
        integer_kth_root(100, 0)
    with pytest.raises(ValueError):
        integer_kth_root(100, 128)


def test_root_random_round_trip():
    rng = random.Random(0xA11CE)
    for _ in range(2000):
        bits = rng.randrange(1, 129)
        x = rng.randrange(1 << (bits - 1), 1 << bits)
        k = rng.randrange(1, 128)
        r = integer_kth_root(x, k)
        assert r ** k <= x < (r + 1) ** k


def test_root_exact_near_perfect_powers():
    # float seeds go wrong exactly here, so probe both sides of r^k
    rng = random.Random(0xB0B)
    for _ in range(500):
        k = rng.randrange(2, 64)
        r = rng.randrange(2, min(2 ** (127 // k), 2 ** 20) + 1)
        power = r ** k
        assert integer_kth_root(power, k) == r
        assert integer_kth_root(power - 1, k) == r - 1
        if power + 1 <= UINT128_MAX:
            assert integer_kth_root(power + 1, k) == r
