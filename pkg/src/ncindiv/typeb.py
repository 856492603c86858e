"""Experimental lab for the type B analogue.

Signed permutations of {-m, ..., -1, 1, ..., m} with m = kn are stored
as the image tuple of 1..m (negative values mean sign flips), so that
w(-x) = -w(x).  The simple generators are s_0 (sign change on 1) and
s_i (the transposition of i and i+1); grouping k consecutive simple
factors of the Coxeter word s_0 s_1 ... s_{kn-1} gives an n-factor
factorization whose Hurwitz orbit, prefix census, and restricted-order
zeta values are compared against conjectured product formulas.

Everything here is report-only: checks return PASS or OPEN statuses
and never raise on a mismatched count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .counting import binomial

SignedPerm = tuple[int, ...]


def sp_identity(m: int) -> SignedPerm:
    return tuple(range(1, m + 1))


def sp_apply(w: SignedPerm, x: int) -> int:
    return w[x - 1] if x > 0 else -w[-x - 1]


def sp_compose(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """(u * v)(x) = u(v(x)); the right factor acts first."""
    return tuple(sp_apply(u, y) for y in v)


def sp_inverse(w: SignedPerm) -> SignedPerm:
    inv = [0] * len(w)
    for x, y in enumerate(w, start=1):
        if y > 0:
            inv[y - 1] = x
        else:
            inv[-y - 1] = -x
    return tuple(inv)


def simple_generator(i: int, m: int) -> SignedPerm:
    """s_0 flips the sign of 1; s_i swaps i and i+1."""
    img = list(range(1, m + 1))
    if i == 0:
        img[0] = -1
    else:
        img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def grouped_factors(n: int, k: int) -> tuple[SignedPerm, ...]:
    """t_j = s_{(j-1)k} * ... * s_{jk-1}, so that t_1 ... t_n is the
    Coxeter word s_0 s_1 ... s_{kn-1}."""
    m = k * n
    out = []
    for j in range(1, n + 1):
        t = sp_identity(m)
        for i in range((j - 1) * k, j * k):
            t = sp_compose(t, simple_generator(i, m))
        out.append(t)
    return tuple(out)


def all_reflections(m: int) -> list[SignedPerm]:
    """The m^2 reflections of the hyperoctahedral group."""
    out = []
    for i in range(1, m + 1):
        img = list(range(1, m + 1))
        img[i - 1] = -i
        out.append(tuple(img))
        for j in range(i + 1, m + 1):
            img = list(range(1, m + 1))
            img[i - 1], img[j - 1] = j, i
            out.append(tuple(img))
            img = list(range(1, m + 1))
            img[i - 1], img[j - 1] = -j, -i
            out.append(tuple(img))
    return out


@lru_cache(maxsize=4)
def reflection_length_table(m: int) -> dict[SignedPerm, int]:
    """Distance from the identity in the full reflection generating set,
    by breadth-first search over the whole group (m <= 6)."""
    if m > 6:
        raise ValueError("reflection-length table limited to m <= 6")
    gens = all_reflections(m)
    start = sp_identity(m)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            d = dist[w]
            for g in gens:
                u = sp_compose(w, g)
                if u not in dist:
                    dist[u] = d + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def hurwitz_orbit_signed(
    start: tuple[SignedPerm, ...], max_states: int = 2_000_000
) -> set[tuple[SignedPerm, ...]]:
    """Breadth-first Hurwitz orbit of a tuple of signed permutations."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for i in range(len(f) - 1):
                a, b = f[i], f[i + 1]
                moves = (
                    (b, sp_compose(sp_compose(sp_inverse(b), a), b)),
                    (sp_compose(sp_compose(a, b), sp_inverse(a)), a),
                )
                for pair in moves:
                    g = f[:i] + pair + f[i + 2 :]
                    if g not in seen:
                        if len(seen) >= max_states:
                            raise RuntimeError("orbit exceeded max_states")
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class LabCheck:
    name: str
    observed: object
    conjectured: object

    @property
    def status(self) -> str:
        return "PASS" if self.observed == self.conjectured else "OPEN"


def typeb_report(n: int, k: int, max_states: int = 2_000_000) -> list[LabCheck]:
    """Orbit size, prefix census, and restricted zeta values for the
    grouped type B factorization, against the conjectured formulas."""
    m = k * n
    if m > 6:
        raise ValueError("type B lab limited to kn <= 6")
    start = grouped_factors(n, k)
    orbit = hurwitz_orbit_signed(start, max_states=max_states)
    checks = [
        LabCheck("hurwitz orbit size", len(orbit), k ** (n - 1) * n**n)
    ]

    prefixes: set[SignedPerm] = set()
    for f in orbit:
        acc = sp_identity(m)
        prefixes.add(acc)
        for t in f:
            acc = sp_compose(acc, t)
            prefixes.add(acc)
    checks.append(
        LabCheck(
            "prefix census",
            len(prefixes),
            2 * binomial(n * k + n - 1, n - 1),
        )
    )

    table = reflection_length_table(m)
    elems = sorted(prefixes)

    def leq(u: SignedPerm, v: SignedPerm) -> bool:
        q = sp_compose(sp_inverse(u), v)
        return table[u] + table[q] == table[v]

    size = len(elems)
    matrix = [[leq(u, v) for v in elems] for u in elems]
    for q in (2, 3):
        # Z(q) = number of (q-1)-element multichains
        if q == 2:
            observed = size
        else:
            observed = sum(
                1
                for i in range(size)
                for j in range(size)
                if matrix[i][j]
            )
        checks.append(
            LabCheck(
                f"restricted zeta at q={q}",
                observed,
                q * binomial(n * k * (q - 1) + n - 1, n - 1),
            )
        )
    return checks
