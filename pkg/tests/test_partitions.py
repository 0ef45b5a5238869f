import math

import pytest
from hypothesis import given, strategies as st

from springer_k.partitions import (
    Partition,
    dual_partition,
    enumerate_partitions,
    multinomial,
    p_function,
    partitions_up_to,
    phi_sequence,
)

P = Partition.of


def test_dual_example_20():
    assert dual_partition(P(5, 4, 4, 2, 2, 2, 1)) == P(7, 6, 3, 3, 1)


def test_dual_row_and_hook():
    assert dual_partition(P(4)) == P(1, 1, 1, 1)
    assert dual_partition(P(2, 1)) == P(2, 1)


def test_p_function_example_20():
    lam_dual = P(7, 6, 3, 3, 1)
    assert [p_function(lam_dual, s) for s in range(16, 21)] == [1, 4, 7, 13, 20]
    assert all(p_function(lam_dual, s) == 0 for s in range(1, 16))


def test_p_function_small():
    lam_dual = dual_partition(P(2, 1))
    assert [p_function(lam_dual, s) for s in (1, 2, 3)] == [0, 1, 3]


@pytest.mark.parametrize("s", [0, 4, -1])
def test_p_function_range(s):
    with pytest.raises(ValueError):
        p_function(P(2, 1), s)


def test_phi_sequence_examples():
    assert phi_sequence(P(2, 1)) == (1, 1, 2)
    assert phi_sequence(P(4)) == (1, 1, 1, 1)
    assert phi_sequence(P(1, 1, 1, 1)) == (1, 2, 3, 4)
    assert phi_sequence(P(2, 2)) == (1, 2, 1, 2)


def test_multinomial_examples():
    assert multinomial(P(2, 1)) == 3
    assert multinomial(P(1, 1, 1)) == 6
    assert multinomial(P(7)) == 1


def test_enumerate_partitions():
    assert enumerate_partitions(3) == [P(3), P(2, 1), P(1, 1, 1)]
    assert enumerate_partitions(1) == [P(1)]
    assert len(enumerate_partitions(4)) == 5
    assert [len(enumerate_partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_invalid_partitions():
    for bad in [(), (0,), (1, 2), (2, -1)]:
        with pytest.raises(ValueError):
            Partition(bad)


def test_parse_and_serialize():
    lam = Partition.parse("5,4,4,2,2,2,1")
    assert lam.parts == (5, 4, 4, 2, 2, 2, 1)
    assert str(lam) == "5,4,4,2,2,2,1"
    assert lam.to_json() == "[5, 4, 4, 2, 2, 2, 1]"
    assert Partition.parse("1,3,2", canonicalize=True) == P(3, 2, 1)
    with pytest.raises(ValueError):
        Partition.parse("1,3,2")


def test_padding_reads_zero():
    lam = P(3, 1)
    assert lam[1] == 3 and lam[2] == 1 and lam[3] == 0 and lam[4] == 0
    assert lam.padded() == (3, 1, 0, 0)


ALL = partitions_up_to(12)


def test_dual_involution_and_size():
    for lam in ALL:
        assert dual_partition(dual_partition(lam)) == lam
        assert dual_partition(lam).n == lam.n


def test_p_function_nondecreasing():
    for lam in ALL:
        vals = [p_function(lam, s) for s in range(1, lam.n + 1)]
        assert vals == sorted(vals)
        assert vals[-1] == lam.n


def test_phi_multiplicities_and_block_lengths():
    for lam in ALL:
        phi = phi_sequence(lam)
        assert len(phi) == lam.n
        assert all(phi.count(j) == lam[j] for j in range(1, lam.length + 1))
        assert sum(r * (lam[r] - lam[r + 1]) for r in range(1, lam.length + 1)) == lam.n


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_multinomial_matches_factorials(parts):
    lam = Partition(tuple(sorted(parts, reverse=True)))
    expected = math.factorial(lam.n)
    for p in parts:
        expected //= math.factorial(p)
    assert multinomial(lam) == expected
