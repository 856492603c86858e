#!/usr/bin/env python
"""Hurwitz action on reduced factorizations and the parking bijection.

Every maximal chain of the poset is a factorization of the long cycle
c_N into n increasing (k+1)-cycles.  The braid group acts transitively
on these factorizations, and reading off factor minima is a bijection
onto k-parking functions that intertwines the symmetric-group action
with entry swaps.
"""

from ncindiv.hurwitz import (
    enumerate_factorizations,
    enumerate_parking_functions,
    hurwitz_move,
    orbit_and_class_report,
    phi_inverse,
    phi_parking,
    sym_action,
)
from ncindiv.perm import KParams, format_cycles


def show(factors) -> str:
    return " | ".join(format_cycles(t) for t in factors)


def main() -> None:
    params = KParams(k=2, n=3)
    facts = enumerate_factorizations(params)
    print(f"reduced factorizations of c_{params.N}: {len(facts)}")

    start = facts[0]
    print(f"\nstart:            {show(start)}")
    print(f"sigma_1:          {show(hurwitz_move(start, 0))}")
    print(f"sigma_1 inverse:  {show(hurwitz_move(start, 0, inverse=True))}")
    print(f"s_1 (sym action): {show(sym_action(start, 0))}")

    report = orbit_and_class_report(params)
    print(f"\norbit of one factorization: {report['orbit_size']}"
          f" (expected {report['expected']}; transitive: {report['transitive']})")
    print(f"commutation classes inside: {report['class_count']}")

    parking = enumerate_parking_functions(params)
    print(f"\nk-parking functions of length n: {len(parking)}")
    image = sorted(phi_parking(f) for f in facts)
    print(f"factor-minima map is a bijection: {image == sorted(parking)}")

    p = (1, 3, 1)
    f = phi_inverse(p, params)
    print(f"\nphi_inverse({p}) = {show(f)}  ->  phi = {phi_parking(f)}")


if __name__ == "__main__":
    main()
