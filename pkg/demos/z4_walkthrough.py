"""Q[Z4] as a cross product of two copies of Q[Z2].

B1 = Q<h> and B2 = Q<x> with trivial actions and coactions; the cocycle
sigma(x, x) = h records the carry of addition mod 4.
"""
from xbialg import build_bialgebra, check_all, check_bialgebra, diagram, example
from xbialg.exact_linear import format_matrix


def main():
    d = example("z4")
    print(d)
    print("sigma =")
    print(format_matrix(d.morphism("sigma")))

    rep = check_all(d)
    print(f"datum: {len(rep)} identities, {'all pass' if rep.passed else 'failures'}")

    B = build_bialgebra(d)
    print("bialgebra laws:")
    for line in check_bialgebra(B):
        print("  ", line)

    # basis h^j (x) x^k sits at 2 j + k
    names = ["1", "x", "h", "hx"]
    print("multiplication table of B1 (x) B2:")
    print("   ", "   ", " ".join(n.ljust(3) for n in names))
    for a in range(4):
        row = []
        for b in range(4):
            (k, v), = B.m.column(4 * a + b).items()
            row.append(names[k] if v == 1 else f"{v}{names[k]}")
        print("  ", names[a].ljust(3), " ".join(s.ljust(3) for s in row))

    # the same product written as a row diagram on B1 B2 B1 B2
    mB = diagram(d, "1212", "| p21 |", "m sh", "m |")
    print("row-diagram product agrees:", mB == d.morphism("m_B"))


if __name__ == "__main__":
    main()
