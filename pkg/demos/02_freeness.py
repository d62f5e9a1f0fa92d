"""Certify and search: every predicted construction avoids the blow-up, and
adding one more dominating vertex lets it in."""

import time

from lollipop_blowup import (
    ConstructionSpec,
    blowup_contains,
    freeness_certificate,
    predicted_extremal,
    realize,
    verify_blowup_embedding,
)

n = 40
for p in (2, 3):
    for k, l in ((3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3)):
        (spec,) = predicted_extremal(k, l, p, n).specs
        cert = freeness_certificate(spec, k, l, p)
        t = time.perf_counter()
        free = blowup_contains(realize(spec), k, l, p) is None
        took = time.perf_counter() - t
        print(f"C_{{{k},{l}}}^{p + 1} in {spec.label():<11} certificate={cert.kind:<12} "
              f"({cert.budget} < {cert.demand})  search: {'free' if free else 'FOUND'} [{took:.2f}s]")

        # one more clique vertex (a plain H host) is enough to embed the blow-up
        bigger = ConstructionSpec("H", n, p, spec.q + 1)
        emb = blowup_contains(realize(bigger), k, l, p)
        assert emb is not None and verify_blowup_embedding(realize(bigger), emb)
        print(f"    {bigger.label():<11} contains it; base lollipop maps to {emb.base_map}")
