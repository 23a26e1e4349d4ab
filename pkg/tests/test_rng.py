import pytest

from pointideal.rng import Xoshiro256, random_variety, splitmix64


def test_splitmix64_reference():
    state, out = splitmix64(0)
    assert out == 0xE220A8397B1DCDAF
    assert splitmix64(state)[1] == 0x6E789E6AA1B965F4


def test_xoshiro_reference_stream():
    # published reference outputs for the state {1, 2, 3, 4}
    rng = Xoshiro256(0)
    rng.s = [1, 2, 3, 4]
    assert [rng.next64() for _ in range(4)] == [11520, 0, 1509978240, 1215971899390074240]


def test_residues_in_range_and_roughly_uniform():
    rng = Xoshiro256(7)
    counts = [0] * 5
    for _ in range(5000):
        counts[rng.residue(5)] += 1
    assert all(900 < c < 1100 for c in counts)


def test_random_variety_contract():
    v = random_variety(3, 4, 5, 1)
    assert v.m == 5 and v.n_vars == 4 and len(set(v.points)) == 5
    assert all(0 <= x < 3 for pt in v.points for x in pt)
    assert random_variety(3, 4, 5, 1) == v
    assert random_variety(3, 4, 5, 2) != v


def test_random_variety_full_space():
    v = random_variety(2, 2, 4, 0)
    assert sorted(v.points) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_random_variety_pigeonhole():
    with pytest.raises(ValueError):
        random_variety(2, 2, 5, 0)
    with pytest.raises(ValueError):
        random_variety(4, 2, 1, 0)
