#!/usr/bin/env python
"""Counting and poset structure of k-indivisible noncrossing partitions.

Walks through the headline exact counts at (k, n) = (2, 3), where
N = kn + 1 = 7, and checks each closed form against the brute-force
poset built from scratch.
"""

from ncindiv.counting import (
    chain_count,
    mobius_invariant,
    nc_cardinality,
    nc_rank_count,
    zeta_value,
)
from ncindiv.nc import nc_filter_oracle
from ncindiv.perm import KParams
from ncindiv.poset import build_poset


def main() -> None:
    params = KParams(k=2, n=3)
    print(f"parameters: k={params.k} n={params.n} N={params.N}")

    oracle = nc_filter_oracle(params)
    print(f"\nelements by filtering S_{params.N}: {len(oracle)}")
    print(f"closed form Ran(n, k+1, 2):        {nc_cardinality(params.n, params.k)}")

    poset = build_poset(params)
    census = {}
    for e in poset.elements:
        census[e.rank] = census.get(e.rank, 0) + 1
    print("\nrank census (brute / closed form):")
    for r in sorted(census):
        print(f"  rank {r}: {census[r]} / {nc_rank_count(params.n, params.k, r)}")

    print(f"\nmaximal chains: {poset.maximal_chain_count()}"
          f" = N^(n-1) = {chain_count(params.n, params.k)}")

    print("\nzeta polynomial (q-multichains):")
    for q in range(4):
        print(f"  Z({q + 1}) = {poset.multichain_count(q)}"
              f" / {zeta_value(params.n, params.k, q)}")

    print(f"\nMobius invariant: {poset.mobius_invariant()}"
          f" = {mobius_invariant(params.n, params.k)}"
          f" = Z(-1) = {zeta_value(params.n, params.k, -2)}")


if __name__ == "__main__":
    main()
