"""Minimal graphs M whose join with a large complete (p-1)-partite graph
(plus isolated padding) hosts the blow-up, computed by brute force and set
against the vertex-split families of the lollipop."""

import time

from lollipop_blowup import (
    blowup,
    decomposition_family_bruteforce,
    encode_graph6,
    lollipop,
    split_family,
)

for (k, l, p, bound) in ((3, 2, 2, 7), (3, 3, 3, 6)):
    L = blowup(lollipop(k, l), p).graph
    t = time.perf_counter()
    fam = decomposition_family_bruteforce(L, p, bound, max(10, L.n))
    took = time.perf_counter() - t
    splits = split_family(lollipop(k, l), "chi", p - 1).filter(lambda g: g.n <= bound)
    print(f"C_{{{k},{l}}}^{p + 1}, p={p}, members on <= {bound} vertices: {len(fam)} "
          f"[{took:.1f}s], split family: {len(splits)}, equal: {fam.codes() == splits.codes()}")
    for g in fam:
        comps = sorted((len(c) for c in g.components()), reverse=True)
        print(f"    {encode_graph6(g):<10} n={g.n} e={g.num_edges()} component orders {comps}")
