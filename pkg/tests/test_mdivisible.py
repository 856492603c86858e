import pytest

from ncindiv.counting import (
    mdiv_cardinality,
    mdiv_mobius_bar,
    mdiv_mobius_hat,
    mdiv_zeta_value,
)
from ncindiv.mdivisible import (
    MChain,
    build_mdiv_poset,
    mchain_leq,
    mdiv_mobius_bar_brute,
    mdiv_mobius_hat_brute,
    with_bottom,
    with_merged_minima,
)
from ncindiv.perm import KParams, ell_k, from_cycles, identity, long_cycle

PARAMS = [(k, n, m) for k in (1, 2) for n in (1, 2, 3) for m in (1, 2, 3)]


def test_delta_sequence():
    params = KParams(2, 3)
    x = from_cycles(7, ((1, 2, 3),))
    chain = MChain((x, x), params)
    d = chain.deltas()
    assert d[0] == x and d[1] == identity(7)
    assert x * d[2] == long_cycle(7)
    assert chain.rank == 1


def test_order_has_constant_top():
    params = KParams(2, 2)
    poset = build_mdiv_poset(params, 2)
    top = poset.elements[poset.top()]
    assert all(x == long_cycle(5) for x in top.chain)
    # every element is below the top, per the raw predicate too
    assert all(mchain_leq(c, top) for c in poset.elements)


@pytest.mark.parametrize("k,n,m", PARAMS)
def test_cardinality_and_zeta(k, n, m):
    poset = build_mdiv_poset(KParams(k, n), m)
    assert len(poset) == mdiv_cardinality(n, k, m)
    for q in (1, 2):
        assert poset.multichain_count(q) == mdiv_zeta_value(n, k, m, q)


@pytest.mark.parametrize("k,n,m", PARAMS)
def test_gradedness(k, n, m):
    poset = build_mdiv_poset(KParams(k, n), m)
    for i, j in poset.covers:
        assert poset.rank[j] == poset.rank[i] + 1


@pytest.mark.parametrize("k,n,m", PARAMS)
def test_mobius_completions(k, n, m):
    params = KParams(k, n)
    assert mdiv_mobius_hat_brute(params, m) == mdiv_mobius_hat(n, k, m)
    assert mdiv_mobius_bar_brute(params, m) == mdiv_mobius_bar(n, k, m)


@pytest.mark.parametrize("k,n,m", PARAMS)
def test_chain_count(k, n, m):
    poset = with_bottom(build_mdiv_poset(KParams(k, n), m))
    N = k * n + 1
    assert poset.maximal_chain_count() == m**n * N ** (n - 1)


def test_completions_are_bounded():
    poset = build_mdiv_poset(KParams(2, 2), 2)
    assert len(poset.minimal_elements()) > 1
    hat = with_bottom(poset)
    assert hat.bottom() == 0 and len(hat) == len(poset) + 1
    bar = with_merged_minima(poset)
    assert bar.bottom() == 0
    assert len(bar) == len(poset) - len(poset.minimal_elements()) + 1


def test_rank_is_first_component_length():
    params = KParams(2, 2)
    poset = build_mdiv_poset(params, 2)
    for c, r in zip(poset.elements, poset.rank):
        assert ell_k(c.chain[0], params.k) == r


def test_rejects_bad_m():
    with pytest.raises(ValueError):
        build_mdiv_poset(KParams(1, 2), 0)
