"""m-divisible k-indivisible noncrossing partitions.

Elements are m-element multichains x_1 <= ... <= x_m in the poset of
k-indivisible noncrossing partitions of [N].  Writing x_0 = identity
and x_{m+1} = long cycle, the delta sequence of a multichain is
d_i = x_i^{-1} x_{i+1} for i = 0..m.  The order reverses the deltas
componentwise away from d_0: C <= C' iff d_i >= d'_i in the
(k+1)-cycle order for every i in 1..m.  The maximum is the constant
chain at the long cycle; there are many minimal elements, so Mobius
invariants are studied on two completions: with an artificial bottom
adjoined (hat) and with all minimal elements identified (bar).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perm import KParams, Permutation, ell_k, format_cycles, long_cycle
from .poset import HasseDiagram, _bits, build_poset, leq_nc, transitive_reduction


@dataclass(frozen=True)
class MChain:
    """An m-multichain in the k-indivisible noncrossing poset."""

    chain: tuple[Permutation, ...]
    params: KParams

    @property
    def m(self) -> int:
        return len(self.chain)

    def deltas(self) -> tuple[Permutation, ...]:
        """d_0 = x_1, d_i = x_i^{-1} x_{i+1}, d_m = x_m^{-1} c_N."""
        ext = self.chain + (long_cycle(self.params.N),)
        out = [self.chain[0]]
        for a, b in zip(ext, ext[1:]):
            out.append(a.inverse() * b)
        return tuple(out)

    @property
    def rank(self) -> int:
        r = ell_k(self.chain[0], self.params.k)
        assert r is not None
        return r

    def __str__(self) -> str:
        return " <= ".join(format_cycles(x) for x in self.chain)


def mchain_leq(c1: MChain, c2: MChain) -> bool:
    """c1 <= c2 iff every delta of c2 past the zeroth divides the
    corresponding delta of c1 in the (k+1)-cycle order."""
    k = c1.params.k
    d1, d2 = c1.deltas(), c2.deltas()
    return all(leq_nc(b, a, k) for a, b in zip(d1[1:], d2[1:]))


def _hasse_from_leq(elements, leq_fn, rank=None, labels=None) -> HasseDiagram:
    """Build a Hasse diagram from an explicit order predicate."""
    size = len(elements)
    down = [1 << i for i in range(size)]
    up = [1 << i for i in range(size)]
    for i in range(size):
        for j in range(size):
            if i != j and leq_fn(elements[i], elements[j]):
                down[j] |= 1 << i
                up[i] |= 1 << j
    covers = []
    for j in range(size):
        for i in _bits(down[j]):
            if i != j and down[j] & up[i] == (1 << i | 1 << j):
                covers.append((i, j))
    return HasseDiagram(
        elements=tuple(elements),
        covers=tuple(covers),
        rank=rank,
        labels=labels,
        down=tuple(down),
        up=tuple(up),
    )


@lru_cache(maxsize=None)
def build_mdiv_poset(params: KParams, m: int) -> HasseDiagram:
    """Poset of m-divisible k-indivisible noncrossing partitions."""
    if m < 1:
        raise ValueError("need m >= 1")
    base = build_poset(params)
    chains: list[MChain] = []

    def extend(acc: list[int]) -> None:
        if len(acc) == m:
            chains.append(
                MChain(tuple(base.elements[i].perm for i in acc), params)
            )
            return
        for j in _bits(base.up[acc[-1]]):
            extend(acc + [j])

    for i in range(len(base)):
        extend([i])
    rank = tuple(c.rank for c in chains)
    return _hasse_from_leq(chains, _fast_mchain_leq(chains, params.k), rank=rank)


def _ell_img(image: tuple[int, ...], k: int) -> int | None:
    """Word length over (k+1)-cycles for an image tuple, or None when
    some cycle length is not 1 mod k."""
    K = len(image)
    seen = [False] * K
    cycles = 0
    for start in range(K):
        if seen[start]:
            continue
        cycles += 1
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            length += 1
            x = image[x] - 1
        if length % k != 1 % k:
            return None
    return (K - cycles) // k


def _fast_mchain_leq(chains: list[MChain], k: int):
    """Precompute delta data and return an index-free order predicate
    equivalent to mchain_leq."""
    data = []
    for c in chains:
        deltas = c.deltas()[1:]
        entry = []
        for d in deltas:
            ell = _ell_img(d.image, k)
            assert ell is not None
            entry.append((d.image, d.inverse().image, ell))
        data.append(entry)
    lookup = {id(c): row for c, row in zip(chains, data)}

    def leq(c1: MChain, c2: MChain) -> bool:
        # c1 <= c2 iff each delta of c2 divides the matching delta of c1
        for (a_img, _a_inv, a_ell), (_b_img, b_inv, b_ell) in zip(
            lookup[id(c1)], lookup[id(c2)]
        ):
            q_img = tuple(b_inv[y - 1] for y in a_img)
            q_ell = _ell_img(q_img, k)
            if q_ell is None or b_ell + q_ell != a_ell:
                return False
        return True

    return leq


def with_bottom(poset: HasseDiagram) -> HasseDiagram:
    """The same poset with one artificial bottom element adjoined."""
    shift = 1
    covers = [(i + shift, j + shift) for i, j in poset.covers]
    covers += [(0, i + shift) for i in poset.minimal_elements()]
    return HasseDiagram(
        elements=("bottom",) + tuple(poset.elements),
        covers=tuple(covers),
        rank=None,
        labels=("0",) + tuple(poset.labels),
    )


def with_merged_minima(poset: HasseDiagram) -> HasseDiagram:
    """The quotient identifying all minimal elements to a single one."""
    mins = set(poset.minimal_elements())
    keep = [i for i in range(len(poset)) if i not in mins]
    remap = {old: new + 1 for new, old in enumerate(keep)}
    covers = set()
    for i, j in poset.covers:
        if i in mins:
            covers.add((0, remap[j]))
        elif j in mins:
            raise ValueError("minimal element above something")
        else:
            covers.add((remap[i], remap[j]))
    reduced = transitive_reduction(len(keep) + 1, covers)
    return HasseDiagram(
        elements=("merged minimum",) + tuple(poset.elements[i] for i in keep),
        covers=reduced,
        rank=None,
        labels=("min",) + tuple(poset.labels[i] for i in keep),
    )


def mdiv_mobius_hat_brute(params: KParams, m: int) -> int:
    """Mobius invariant of the m-divisible poset with a bottom adjoined."""
    return with_bottom(build_mdiv_poset(params, m)).mobius_invariant()


def mdiv_mobius_bar_brute(params: KParams, m: int) -> int:
    """Mobius invariant of the m-divisible poset with minima merged."""
    return with_merged_minima(build_mdiv_poset(params, m)).mobius_invariant()
