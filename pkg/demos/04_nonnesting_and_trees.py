#!/usr/bin/env python
"""The nonnesting side and the bicolored-tree pipeline.

k-indivisible noncrossing partitions are equinumerous with order ideals
of a root-poset-style triangular array, via lattice paths; the bijection
factors through bicolored plane trees split into two (k+1)-ary trees.
"""

from ncindiv.bijections import (
    enumerate_ideals,
    gj_tree,
    ideal_to_path,
    nc_to_nn,
    nc_to_paths,
    nn_to_nc,
    path_decompose,
    split_tree,
)
from ncindiv.counting import bareiss_determinant, fuss_catalan, nc_cardinality, nc_matrix
from ncindiv.perm import KParams
from ncindiv.poset import build_poset


def main() -> None:
    params = KParams(k=2, n=3)
    ideals = enumerate_ideals(params)
    print(f"order ideals: {len(ideals)}"
          f" = nc cardinality {nc_cardinality(params.n, params.k)}")
    det = bareiss_determinant(nc_matrix(params.n, params.k))
    print(f"determinant formula agrees: {det}")

    ideal = ideals[len(ideals) // 2]
    word = ideal_to_path(ideal)
    p1, p2 = path_decompose(word, params)
    print(f"\nsample ideal -> path {word} -> split U|{p1}|R|{p2}")

    elements = build_poset(params).elements
    round_trips = all(nn_to_nc(nc_to_nn(e)) == e for e in elements)
    print(f"noncrossing <-> nonnesting round trips on all elements: {round_trips}")

    census: dict[int, int] = {}
    for e in elements:
        tree = gj_tree(e)
        white, black = split_tree(tree)
        first, _second = nc_to_paths(e)
        census[first.count("U")] = census.get(first.count("U"), 0) + 1
    print("\nconvolution census (observed / product of Fuss-Catalans):")
    for i in sorted(census):
        expect = fuss_catalan(i, params.k + 1) * fuss_catalan(params.n - i, params.k + 1)
        print(f"  first part with {i} ascents: {census[i]} / {expect}")


if __name__ == "__main__":
    main()
