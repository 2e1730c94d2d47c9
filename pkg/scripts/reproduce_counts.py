#!/usr/bin/env python3
"""Rebuild every named construction and print its headline numbers.

Everything here is recomputed by enumeration; nothing is read from tables.
"""

import time
from math import comb

from gallai import (covering_4graph_colouring, covering_blowup,
                    cyclic_prime_colouring, delete_vertex, is_class_connected,
                    k17_colouring, minimal_connected_3graph, monochromatic,
                    multicoloured_family, parity_covering_2colouring,
                    paths_colouring, pointwise_cycles_colouring,
                    strong_blowup, tricoloured_count, upper_bound_pipeline,
                    is_connected)


def row(label, value, t0):
    print(f"{label:58s} {value:28s} {time.perf_counter() - t0:7.2f}s")


def main():
    print(f"{'construction':58s} {'result':28s} {'time':>8s}")
    print("-" * 96)

    for k in (3, 5, 6, 8):
        t0 = time.perf_counter()
        c = cyclic_prime_colouring(k)
        fam = multicoloured_family(c, 3).family
        row(f"cyclic K_{2*k+1}, k={k}",
            f"{len(fam)} colour sets (= k(k-2)/3)", t0)

    t0 = time.perf_counter()
    c10 = delete_vertex(cyclic_prime_colouring(5), 0)
    row("cyclic K_11 minus a vertex",
        f"{len(multicoloured_family(c10, 3).family)} colour sets on K_10", t0)

    for k in range(4, 11):
        t0 = time.perf_counter()
        res = upper_bound_pipeline(k)
        row(f"pipeline k={k} (base k0={res.k0}, n={res.colouring.n})",
            f"{res.realised_count} colour sets (predicted)", t0)

    for k, n, d in ((3, 20, 3), (5, 40, 3), (6, 500, 4)):
        t0 = time.perf_counter()
        c = paths_colouring(k, n, seed=0, d=d)
        fam = multicoloured_family(c, 3).family if d == 3 else None
        desc = (f"{len(fam)} colour sets" if fam is not None
                else "girth(union) > 4, max K_4 colours = 4")
        row(f"paths colouring k={k}, d={d}, n={n}", desc, t0)

    t0 = time.perf_counter()
    c = k17_colouring()
    mc = multicoloured_family(c, 4)
    row("K_17^(3), 4 colours by distance type",
        f"{mc.count}/{mc.visited} multicoloured 4-sets", t0)

    t0 = time.perf_counter()
    c = pointwise_cycles_colouring(4, 13)
    mc = multicoloured_family(c, 4)
    tc = tricoloured_count(c)
    row("pointwise cycles K_13^(3), k=4",
        f"{mc.count} multicoloured, {tc.count_at_least} tricoloured", t0)

    t0 = time.perf_counter()
    c81 = strong_blowup(strong_blowup(monochromatic(3, 3)))
    row("strong blow-up chain K_3 -> K_81",
        f"{multicoloured_family(c81, 4).count}/{comb(81, 4)} multicoloured", t0)

    t0 = time.perf_counter()
    c289 = strong_blowup(k17_colouring())
    ok = all(is_class_connected(c289, i, "strong").ok for i in range(1, 6))
    row("strong blow-up K_17 -> K_289 (5 colours)",
        f"{multicoloured_family(c289, 4).count}/{comb(289, 4)}; strong={ok}", t0)

    t0 = time.perf_counter()
    c256 = covering_blowup(covering_blowup(monochromatic(4, 3)))
    row("covering blow-up chain K_4 -> K_256",
        f"{tricoloured_count(c256).count_at_least}/{comb(256, 4)} tricoloured", t0)

    t0 = time.perf_counter()
    base = parity_covering_2colouring(8)
    big = covering_4graph_colouring(base, base)
    row("covering 3-colouring K_64^(4) (parity bases, n=8)",
        f"{tricoloured_count(big).count_at_least}/{comb(64, 5)} with >=3 colours", t0)

    t0 = time.perf_counter()
    bad = [n for n in range(4, 31)
           if len(minimal_connected_3graph(n).edges) != comb(n, 2) // 2
           or not is_connected(minimal_connected_3graph(n), "strong").ok]
    row("minimal strongly connected 3-graphs n=4..30",
        "all floor(C(n,2)/2), connected" if not bad else f"FAILED at {bad}", t0)


if __name__ == "__main__":
    main()
