import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointideal.order import (TermOrder, compare, divides, induced_order, parse_order,
                              variable_rank)


def monomials_up_to(n, deg):
    return [a for a in itertools.product(range(deg + 1), repeat=n) if sum(a) <= deg]


def test_compare_examples():
    assert compare(TermOrder("lex", 2), (1, 0), (0, 2)) == 1
    assert compare(TermOrder("grevlex", 2), (1, 0), (0, 2)) == -1
    for kind in ("lex", "grevlex"):
        assert compare(TermOrder(kind, 2), (3, 1), (3, 1)) == 0


def test_compare_length_mismatch():
    with pytest.raises(ValueError):
        compare(TermOrder("lex", 2), (1, 0), (1, 0, 0))


def test_grevlex_tie_break():
    # same degree: the monomial with less of the smallest variable wins
    o = TermOrder("grevlex", 3)
    assert compare(o, (1, 1, 0), (2, 0, 0)) == -1
    assert compare(o, (0, 2, 0), (1, 0, 1)) == 1


def test_variable_rank():
    assert variable_rank(TermOrder("lex", 3)) == [2, 1, 0]
    assert variable_rank(TermOrder("grevlex", 3)) == [2, 1, 0]
    assert variable_rank(TermOrder("lex", 1)) == [0]
    assert variable_rank(TermOrder("lex", 3, (1, 2, 0))) == [0, 2, 1]


def test_divides():
    assert divides((1, 0), (2, 1))
    assert not divides((0, 2), (1, 1))
    assert divides((0, 0), (5, 7))
    with pytest.raises(ValueError):
        divides((1,), (1, 1))


def test_induced_lex():
    sub = induced_order(TermOrder("lex", 3), [0, 2])
    assert sub.kind == "lex" and sub.priority == (0, 1)
    assert compare(sub, (1, 0), (0, 5)) == 1


def _check_induced(order, variables, deg):
    sub = induced_order(order, variables)
    vs = sorted(variables)
    mons = monomials_up_to(len(vs), deg)

    def lift(a):
        out = [0] * order.n
        for v, e in zip(vs, a):
            out[v] = e
        return tuple(out)

    for a in mons:
        for b in mons:
            assert compare(sub, a, b) == compare(order, lift(a), lift(b))


def test_induced_grevlex_brute_force():
    _check_induced(TermOrder("grevlex", 3), [1, 2], 4)


@pytest.mark.parametrize("kind", ["lex", "grevlex"])
@pytest.mark.parametrize("seed", range(5))
def test_induced_random_priority_brute_force(kind, seed):
    rng = random.Random(seed)
    prio = list(range(4))
    rng.shuffle(prio)
    order = TermOrder(kind, 4, prio)
    _check_induced(order, rng.sample(range(4), rng.randint(1, 3)), 3)
    _check_induced(order.to_matrix_order(), rng.sample(range(4), rng.randint(1, 3)), 3)


def test_induced_single_variable_is_degree():
    sub = induced_order(TermOrder("grevlex", 3), [1])
    assert [compare(sub, (i,), (j,)) for i, j in [(1, 2), (3, 3), (4, 0)]] == [-1, 0, 1]


def test_induced_empty():
    with pytest.raises(ValueError):
        induced_order(TermOrder("lex", 2), [])


orders = st.sampled_from([
    TermOrder("lex", 3), TermOrder("grevlex", 3), TermOrder("lex", 3, (2, 0, 1)),
    TermOrder("grevlex", 3, (1, 2, 0)),
    TermOrder("matrix", 3, None, ((1, 1, 1), (0, 0, -1), (0, -1, 0))),
    TermOrder("matrix", 3, None, ((2, 1, 0), (0, 1, 1), (1, 0, 0))),
])
mono = st.tuples(*[st.integers(0, 5)] * 3)


@given(orders, mono, mono, mono)
def test_total_order_properties(o, a, b, c):
    ab, ba = compare(o, a, b), compare(o, b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab <= 0 and compare(o, b, c) <= 0:
        assert compare(o, a, c) <= 0
    assert compare(o, a, b) == compare(o, tuple(x + y for x, y in zip(a, c)),
                                      tuple(x + y for x, y in zip(b, c)))
    if any(a):
        assert compare(o, a, (0, 0, 0)) == 1


@given(st.sampled_from(["lex", "grevlex"]), st.permutations(range(4)),
       st.tuples(*[st.integers(0, 4)] * 4), st.tuples(*[st.integers(0, 4)] * 4))
def test_direct_comparator_matches_matrix(kind, prio, a, b):
    o = TermOrder(kind, 4, tuple(prio))
    assert compare(o, a, b) == compare(o.to_matrix_order(), a, b)


def test_matrix_validation():
    with pytest.raises(ValueError):
        TermOrder("matrix", 2, None, ((1, 1), (1, 1)))  # rank 1
    with pytest.raises(ValueError):
        TermOrder("matrix", 2, None, ((-1, 0), (0, 1)))  # 1 not minimal
    with pytest.raises(ValueError):
        TermOrder("matrix", 2)


def test_parse_order():
    assert parse_order("lex", 3) == TermOrder("lex", 3)
    assert parse_order("grevlex", 2, "2,1") == TermOrder("grevlex", 2, (1, 0))
    assert parse_order("lex varorder=3,1,2", 3).priority == (2, 0, 1)
    m = parse_order("matrix:1,1,0,-1", 2)
    assert m.kind == "matrix" and m.weights == ((1, 1), (0, -1))
    assert compare(m, (1, 0), (0, 1)) == compare(TermOrder("grevlex", 2), (1, 0), (0, 1))
    for bad in ("", "deglex", "matrix:1,2,3", "lex varorder=1,1"):
        with pytest.raises(ValueError):
            parse_order(bad, 2)


def test_spec_round_trip():
    for o in (TermOrder("lex", 3, (2, 0, 1)), parse_order("matrix:1,1,0,-1", 2), TermOrder("grevlex", 2)):
        assert parse_order(o.spec(), o.n) == o
