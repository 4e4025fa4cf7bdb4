"""Build, factor back and compare; then recover EX-S3 from a bare group table."""
import itertools

from xbialg import (
    Bialgebra, Braiding, Context, Mor, ProjectionSystem, Word, build_bialgebra, example,
    extract_datum, table_algebra,
)
from xbialg.universal import check_grid


def s3_elements():
    """Permutations c^i g^k in the basis order 2 i + k, c = (0 1 2), g = (1 2)."""
    c, g, e = (1, 2, 0), (0, 2, 1), (0, 1, 2)

    def mul(p, q):
        return tuple(p[q[t]] for t in range(3))

    out = []
    for i, k in itertools.product(range(3), range(2)):
        p = e
        for _ in range(i):
            p = mul(p, c)
        out.append(mul(p, g) if k else p)
    return out


def canonical_round_trip():
    for name in ("triv", "s3", "z4", "sweedler"):
        d = example(name)
        B = build_bialgebra(d)
        P = ProjectionSystem.canonical(d)
        e = extract_datum(B, P)
        grid = check_grid(d, B, P)
        print(f"{name:9s} extract == datum: {e == d}   grid: {grid.passed} ({len(grid)} lines)")


def from_group_table():
    els = s3_elements()
    n = len(els)
    ctx = Context(example("s3").field, {"A": n}, Braiding("flip"))
    table = {(i, j): {els.index(tuple(els[i][els[j][t]] for t in range(3))): 1}
             for i in range(n) for j in range(n)}
    A = table_algebra(ctx, "A", table)
    w = A.word
    d = Mor(w, w + w, {j: {j * n + j: 1} for j in range(n)}, ctx.field)
    eps = Mor(w, Word(), {j: {0: 1} for j in range(n)}, ctx.field)
    B = Bialgebra(ctx, w, A.m, A.eta, d, eps, name="QS3")

    # c^i g^k sits at 2 i + k: P1 keeps the rotation, P2 the reflection
    P1 = Mor(w, w, {j: {2 * (j // 2): 1} for j in range(n)}, ctx.field)
    P2 = Mor(w, w, {j: {j % 2: 1} for j in range(n)}, ctx.field)
    P = ProjectionSystem.from_idempotents(P1, P2)
    P.factor_ctx = example("s3").ctx
    e = extract_datum(B, P)
    print("QS3 factors as EX-S3:", e == example("s3"))
    print("mu_l =", e.morphism("mul").to_rows())


if __name__ == "__main__":
    canonical_round_trip()
    from_group_table()
