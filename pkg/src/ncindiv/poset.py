"""Finite poset machinery: Hasse diagrams, chain and multichain counts,
Mobius values, and the poset of k-indivisible noncrossing partitions.

Order relations are stored as per-element bitmasks over the element
indices, which keeps the desk-scale posets (a few thousand elements)
cheap to query.  Counting that needs a full relation matrix is done
with an integer numpy matrix; all counts stay far below 2^63 at the
sizes this module is used for.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .nc import NoncrossingElement, enumerate_nc
from .perm import KParams, Permutation, covers_below, ell_k


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class HasseDiagram:
    """A finite poset given by its elements and cover relation.

    covers holds index pairs (i, j) meaning element i is covered by
    element j.  rank is present only for graded posets.  down[i] and
    up[i] are bitmasks of the weakly-below and weakly-above elements.
    """

    elements: tuple
    covers: tuple[tuple[int, int], ...]
    rank: tuple[int, ...] | None = None
    labels: tuple[str, ...] | None = None
    down: tuple[int, ...] = field(default_factory=tuple)
    up: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.down:
            self.down, self.up = _closure(len(self.elements), self.covers)
        if self.labels is None:
            self.labels = tuple(str(e) for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def topological_order(self) -> list[int]:
        return sorted(range(len(self)), key=lambda i: self.down[i].bit_count())

    def minimal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if self.up[i] == 1 << i]

    def bottom(self) -> int:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise ValueError("poset has no unique minimum")
        return mins[0]

    def top(self) -> int:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise ValueError("poset has no unique maximum")
        return maxs[0]

    def rank_census(self) -> dict[int, int]:
        if self.rank is None:
            raise ValueError("poset is not graded")
        census: dict[int, int] = {}
        for r in self.rank:
            census[r] = census.get(r, 0) + 1
        return census

    def maximal_chain_count(self) -> int:
        """Number of maximal chains from the minimum to the maximum,
        counted by dynamic programming over the cover relation."""
        counts = [0] * len(self)
        counts[self.bottom()] = 1
        children: dict[int, list[int]] = {}
        for i, j in self.covers:
            children.setdefault(j, []).append(i)
        for j in self.topological_order():
            for i in children.get(j, []):
                counts[j] += counts[i]
        return counts[self.top()]

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """All maximal chains as index tuples, bottom to top."""
        children: dict[int, list[int]] = {}
        for i, j in self.covers:
            children.setdefault(i, []).append(j)
        top, out = self.top(), []

        def walk(i: int, acc: list[int]) -> None:
            acc.append(i)
            if i == top:
                out.append(tuple(acc))
            else:
                for j in children.get(i, []):
                    walk(j, acc)
            acc.pop()

        walk(self.bottom(), [])
        return out

    def _leq_matrix(self) -> np.ndarray:
        size = len(self)
        nbytes = (size + 7) // 8
        rows = np.frombuffer(
            b"".join(d.to_bytes(nbytes, "little") for d in self.down),
            dtype=np.uint8,
        ).reshape(size, nbytes)
        return np.unpackbits(rows, axis=1, bitorder="little", count=size)

    def multichain_count(self, q: int) -> int:
        """Number of multichains x_1 <= ... <= x_q (q >= 0)."""
        if q < 0:
            raise ValueError("q must be nonnegative")
        if q == 0:
            return 1
        matrix = self._leq_matrix().astype(np.int64)
        vec = np.ones(len(self), dtype=np.int64)
        for _ in range(q - 1):
            vec = matrix @ vec
            if vec.max() > 2**60:
                raise OverflowError("multichain count exceeds exact int64 range")
        return int(vec.sum())

    def multichain_jump_census(self, q: int) -> dict[tuple[int, ...], int]:
        """Census of q-element multichains by rank-jump profile
        (rank(x_1), rank(x_2)-rank(x_1), ..., top_rank - rank(x_q))."""
        if self.rank is None:
            raise ValueError("poset is not graded")
        top_rank = max(self.rank)
        census: dict[tuple[int, ...], int] = {}

        def walk(i: int, depth: int, profile: tuple[int, ...]) -> None:
            if depth == q:
                key = profile + (top_rank - self.rank[i],)
                census[key] = census.get(key, 0) + 1
                return
            for j in _bits(self.up[i]):
                walk(j, depth + 1, profile + (self.rank[j] - self.rank[i],))

        if q == 0:
            return {(top_rank,): 1}
        for i in range(len(self)):
            walk(i, 1, (self.rank[i],))
        return census

    def mobius_from_bottom(self) -> list[int]:
        """Mobius values mu(bottom, x) by the defining recursion."""
        bottom = self.bottom()
        mu = [0] * len(self)
        for i in self.topological_order():
            if i == bottom:
                mu[i] = 1
            elif self.is_leq(bottom, i):
                mu[i] = -sum(mu[z] for z in _bits(self.down[i]) if z != i)
        return mu

    def mobius_invariant(self) -> int:
        return self.mobius_from_bottom()[self.top()]

    def is_lattice(self) -> bool:
        """True iff every pair of elements has a meet and a join."""
        size = len(self)
        for i in range(size):
            for j in range(i + 1, size):
                down = self.down[i] & self.down[j]
                if sum(1 for z in _bits(down) if self.up[z] & down == 1 << z) != 1:
                    return False
                upc = self.up[i] & self.up[j]
                if sum(1 for z in _bits(upc) if self.down[z] & upc == 1 << z) != 1:
                    return False
        return True

    def to_dot(self, name: str = "poset") -> str:
        """Graphviz DOT text of the Hasse diagram, edges upward."""
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, label in enumerate(self.labels):
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)

    def rank_census_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["rank", "count"])
        for r, c in sorted(self.rank_census().items()):
            writer.writerow([r, c])
        return buf.getvalue()


def _closure(size: int, covers: tuple[tuple[int, int], ...]):
    """Reflexive-transitive closure of a cover relation as bitmasks."""
    down = [1 << i for i in range(size)]
    children: dict[int, list[int]] = {}
    indeg = [0] * size
    out_edges: dict[int, list[int]] = {}
    for i, j in covers:
        children.setdefault(j, []).append(i)
        out_edges.setdefault(i, []).append(j)
        indeg[j] += 1
    # Kahn order so each down-mask is complete before use.
    order = [i for i in range(size) if indeg[i] == 0]
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        for j in out_edges.get(i, []):
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    if len(order) != size:
        raise ValueError("cover relation contains a cycle")
    for j in order:
        for i in children.get(j, []):
            down[j] |= down[i]
    up = [1 << i for i in range(size)]
    for j in range(size):
        for i in _bits(down[j]):
            if i != j:
                up[i] |= 1 << j
    return tuple(down), tuple(up)


def transitive_reduction(size: int, edges: set[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Cover pairs of the partial order generated by an acyclic edge set."""
    down, _up = _closure(size, tuple(edges))
    covers = []
    for i, j in sorted(edges):
        between = down[j] & ~down[i] & ~(1 << j)
        # i < z < j exists iff some z above i (strictly) sits strictly below j
        strict = [z for z in _bits(between) if z != i and down[z] >> i & 1]
        if not strict:
            covers.append((i, j))
    return tuple(covers)


def refines(u: Permutation, w: Permutation) -> bool:
    """True iff every block of u is contained in a block of w."""
    block_of = {}
    for cyc in w.cycles():
        mask = 0
        for x in cyc:
            mask |= 1 << x
        for x in cyc:
            block_of[x] = mask
    for cyc in u.cycles():
        if len(cyc) == 1:
            continue
        mask = 0
        for x in cyc:
            mask |= 1 << x
        if mask & ~block_of[cyc[0]]:
            return False
    return True


def leq_nc(u: Permutation, w: Permutation, k: int) -> bool:
    """The order generated by (k+1)-cycles, for w with all cycle lengths
    1 mod k: u <= w iff the word lengths of u and u^{-1} w add to that
    of w (all three must have the closed form defined)."""
    lw = ell_k(w, k)
    if lw is None:
        raise ValueError("leq_nc needs an upper element with cycle lengths 1 mod k")
    if k % 2 == 0 and not u.is_even():
        return False
    lu = ell_k(u, k)
    if lu is None:
        return False
    lq = ell_k(u.inverse() * w, k)
    return lq is not None and lu + lq == lw


@lru_cache(maxsize=None)
def build_poset(params: KParams) -> HasseDiagram:
    """The graded poset of k-indivisible noncrossing partitions,
    ordered by refinement (equivalently by the (k+1)-cycle order)."""
    elements = tuple(enumerate_nc(params))
    rank = tuple(e.rank for e in elements)
    index = {e.perm.image: i for i, e in enumerate(elements)}
    covers = []
    for j, e in enumerate(elements):
        for u in covers_below(e.perm, params.k):
            covers.append((index[u.image], j))
    return HasseDiagram(elements=elements, covers=tuple(covers), rank=rank)
