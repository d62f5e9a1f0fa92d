"""Exact small Turán numbers by exhaustive generation, next to the greedy
random lower bound, plus a look at the structure of the extremal graphs."""

from lollipop_blowup import dnpr_check, ex_bruteforce, lollipop, make_basic, random_maximal_lowerbound

patterns = {
    "K3": make_basic("complete", 3),
    "C4": make_basic("cycle", 4),
    "C_{3,1}": lollipop(3, 1),
    "C_{3,2}": lollipop(3, 2),
}
for name, pattern in patterns.items():
    row = []
    for n in range(4, 9):
        exact = ex_bruteforce(n, pattern)
        greedy = random_maximal_lowerbound(n, pattern, seed=n, iters=5).num_edges()
        row.append(f"n={n}: {exact.max_edges} ({len(exact.witnesses)} ext., greedy {greedy})")
    print(f"{name:<8}" + "; ".join(row))

# Extremal graphs for the triangle with a pendant edge at n = 8:
res = ex_bruteforce(8, lollipop(3, 1))
for g in res.witnesses:
    dec = dnpr_check(g, 2, 1)
    shape = "no decomposition" if dec is None else (
        f"classes {[len(c) for c in dec.classes]}, exceptional {list(dec.exceptional)}")
    print(f"ex(8, C_{{3,1}}) witness with {g.num_edges()} edges: {shape}")
