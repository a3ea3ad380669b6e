"""Walk through one diagram: grading, degree-1 and degree-2 roots, the Gram
matrix of an explicit lam, and its determinant over Z and GF(2).

    python demos/gram_walkthrough.py
"""

from wdg import PartitionInput, construct_lambda, diagram_from_input, odd_sequence
from wdg.diagrams import divisors_from_input, phi_d
from wdg.gram import GF2, LambdaAssignment, build_gram, gram_det


def show(p: PartitionInput) -> None:
    d = diagram_from_input(p)
    print(f"{p.label()}: divisors {divisors_from_input(p)}, weights {d.weights}")
    print(f"  odd sequence {odd_sequence(d).indices}")
    deg1, deg2 = phi_d(d, 1), phi_d(d, 2)
    print(f"  {len(deg1)} roots in degree 1, {len(deg2)} in degree 2")

    c = construct_lambda(d)
    print(f"  lam ({c.provenance}) is 1 on: {', '.join(map(str, c.lam.support()))}")
    g = build_gram(d, c.lam)
    width = max(len(str(x)) for row in g.entries for x in row)
    for row in g.entries:
        print("   ", " ".join(str(x).rjust(width) for x in row))
    print(f"  det over Z = {c.det}")
    mod2 = LambdaAssignment(GF2, {r: v & 1 for r, v in c.lam.values.items()})
    print(f"  det over GF(2) = {gram_det(d, mod2)}")
    print()


show(PartitionInput("A", 3, (2, 1, 1)))
show(PartitionInput("C", 3, (2, 1)))
show(PartitionInput("B", 4, (2, 1), (3,)))
