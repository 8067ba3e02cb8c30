"""The clique number of a product from its factors.

For each factor, take a maximum clique split into square-zero members B
and the rest C, choosing among maximum cliques one with |B| largest. Then

    omega(R_1 x ... x R_n) = |B_1|...|B_n| + |C_1| + ... + |C_n|

and the witness is the box B_1 x ... x B_n together with each C_i embedded
on its own axis. The script evaluates the formula, materializes the
witness, and cross-checks against a direct branch-and-bound solve.
"""

from beckring import build_graph, make_product, max_clique, omega_product_formula, ring_of

EXAMPLES = [
    ("Z2", "Z2"),
    ("Z4", "Z4"),
    ("Z8", "Z8"),
    ("Z8", "Z9"),
    ("Z4", "Z8", "Z9"),
    ("AN", "Z2"),
]

for names in EXAMPLES:
    factors = [ring_of(n) for n in names]
    pred = omega_product_formula(factors)
    parts = " * ".join(str(s.b_size) for s in pred.splits)
    axes = " + ".join(str(s.c_size) for s in pred.splits)
    direct = max_clique(build_graph(make_product(factors))).size
    status = "matches" if direct == pred.predicted else "DISAGREES WITH"
    print(f"{' x '.join(names)}:")
    for name, split in zip(names, pred.splits):
        print(f"  {name}: omega={split.clique.size} |B|={split.b_size} |C|={split.c_size}")
    print(f"  formula ({parts}) + ({axes}) = {pred.predicted}; direct solve {direct} ({status})")
