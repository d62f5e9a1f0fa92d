"""Which graph is predicted extremal for each lollipop blow-up, and how far
above the Turán graph does it sit?"""

from lollipop_blowup import edge_count_formula, predicted_extremal, realize
from lollipop_blowup.constructions import turan_edges

n = 40
print(f"n = {n}; T_p(n) edge counts: p=2 -> {turan_edges(n, 2)}, p=3 -> {turan_edges(n, 3)}\n")
print(f"{'k':>2} {'l':>2} {'p':>2}  {'construction':<12} {'edges':>6} {'excess':>6}  rule")
for p in (2, 3, 4):
    for k in (3, 4, 5, 6):
        for l in (1, 2, 3):
            pred = predicted_extremal(k, l, p, n)
            for spec in pred.specs:
                e = edge_count_formula(spec)
                assert e == realize(spec).num_edges()
                excess = e - turan_edges(n, p)
                print(f"{k:>2} {l:>2} {p:>2}  {spec.label():<12} {e:>6} {excess:>6}  {pred.rule}")

# The triangle-with-pendant case with p = 2 has a whole family, selected by n.
for n in (12, 14, 18, 20):
    pred = predicted_extremal(3, 1, 2, n)
    print(f"\nn={n}: " + ", ".join(f"{s.label()} [{edge_count_formula(s)}]" for s in pred.specs))
