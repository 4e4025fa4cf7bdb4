import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import CORPUS
from xbialg import (
    GF, QQ, Braiding, Context, ExprSyntaxError, ExprTypeError, HopfDatum, Mor, SignatureError,
    compose,
    diagram, evaluate, example, parse_expr, pi_dual, pi_rotate, print_expr, relativize_codomain,
    relativize_domain, tensor, typecheck,
)
from xbialg.diagram_engine import GENERATORS
from xbialg.exact_linear import Word, identity, plain


def flip_ctx(n1=2, n2=2, field=QQ):
    return Context(field, {"B1": n1, "B2": n2}, Braiding("flip"))


# ---------------------------------------------------------------- parser


def test_parse_identity_leaf():
    e = parse_expr("id[B1]")
    assert typecheck(e) == (("B1",), ("B1",))


def test_parse_nested_multiplication():
    e = parse_expr("(m1 . (id[B1] x m1))")
    assert typecheck(e) == (("B1", "B1", "B1"), ("B1",))
    assert print_expr(e) == "(m1 . (id[B1] x m1))"


def test_type_error_names_both_words():
    with pytest.raises(ExprTypeError, match=r"dom = \[B1,B1\] but cod = \[\]"):
        typecheck(parse_expr("(m1 . eps1)"))


@pytest.mark.parametrize("text, pos", [
    ("(m1 . m2", 8), ("(m1 + m2)", 4), ("foo", 0), ("m1 m2", 3), ("id[B3]", 3), ("", 0),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.position == pos


def test_unknown_generator_message():
    with pytest.raises(ExprSyntaxError, match="unknown generator 'mu'"):
        parse_expr("(mu x m1)")


@pytest.mark.parametrize("text", CORPUS)
def test_print_parse_round_trip(text):
    assert print_expr(parse_expr(text)) == text


@pytest.mark.parametrize("text", CORPUS)
def test_reparsed_expression_evaluates_identically(text):
    d = example("sweedler")
    e = parse_expr(text)
    assert evaluate(parse_expr(print_expr(e)), d) == evaluate(e, d)


def test_psi_under_flip_is_perfect_shuffle():
    d = example("triv")
    P = evaluate("psi[B1,B2]", d)
    for i in range(2):
        for j in range(2):
            assert P.column(i * 2 + j) == {j * 2 + i: 1}


def test_counit_after_braid_matches_direct_composition():
    d = example("sweedler")
    direct = compose(tensor(d.morphism("eps1"), identity(d.ctx.word("2"))),
                     d.ctx.braid("2", "1"))
    assert evaluate("((eps1 x id[B2]) . psi[B2,B1])", d) == direct


def test_counit_after_braid_hand_values():
    # eps1(1) = 1, eps1(x) = 0 on span{1, x}; input index = 2 * g + b1
    d = example("sweedler")
    out = evaluate("((eps1 x id[B2]) . psi[B2,B1])", d)
    assert out.to_rows() == [[1, 0, 0, 0], [0, 0, 1, 0]]


def test_env_boxes_in_expressions():
    d = example("z4")
    f = d.morphism("m1")
    assert evaluate("(F . (id[B1] x F))", d, env={"F": f}) == diagram(d, "111", "| m", "m")


# ---------------------------------------------------------------- braiding


def test_flip_braiding_permutation():
    ctx = flip_ctx()
    b = ctx.braid("1", "2")
    assert b.to_rows() == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_braid_with_unit_is_identity():
    ctx = flip_ctx()
    assert ctx.braid("", "12") == ctx.id("12")


def test_sign_braiding_odd_crossing():
    ctx = Context(QQ, {"B1": 2, "B2": 2}, Braiding("sign", {"B1": [1, 1], "B2": [0, 0]}))
    b = ctx.braid("1", "1")
    for j in range(4):
        (i, v), = b.column(j).items()
        assert v == -1
    ctx = Context(QQ, {"B1": 2, "B2": 2}, Braiding("sign", {"B1": [0, 1], "B2": [0, 0]}))
    assert ctx.braid("1", "1").column(3) == {3: -1}
    assert ctx.braid("1", "1").column(1) == {2: 1}


def test_braid_inverse():
    ctx = Context(GF(3), {"B1": 2, "B2": 3}, Braiding("sign", {"B1": [0, 1], "B2": [1, 0, 1]}))
    x, y = ctx.word("12"), ctx.word("21")
    assert compose(ctx.braid(x, y, inverse=True), ctx.braid(x, y)) == ctx.id(x + y)


words = st.lists(st.sampled_from(["B1", "B2"]), max_size=4).map(tuple)


def explicit_braiding():
    """A non-symmetric braiding: flip scaled by q on B1 B1 and by 1/q elsewhere on B1."""
    f = QQ
    gens, invs = {}, {}
    for a in ("B1", "B2"):
        for b in ("B1", "B2"):
            x, y = Word((a,), (2,)), Word((b,), (2,))
            q = 3 if a == b == "B1" else 1
            gens[(a, b)] = Mor(x + y, y + x, {i * 2 + j: {j * 2 + i: q} for i in range(2)
                                              for j in range(2)}, f)
            invs[(a, b)] = Mor(y + x, x + y, {j * 2 + i: {i * 2 + j: Fraction(1, q)}
                                              for i in range(2) for j in range(2)}, f)
    return Braiding("explicit", generators=gens, inverses=invs)


BRAIDINGS = [Braiding("flip"), Braiding("sign", {"B1": [0, 1], "B2": [1, 1]}), explicit_braiding()]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(3)), words, words, words)
def test_hexagons(k, x, y, z):
    ctx = Context(QQ, {"B1": 2, "B2": 2}, BRAIDINGS[k])
    X, Y, Z = (Word(w, (2,) * len(w)) for w in (x, y, z))
    br = ctx.braid
    assert br(X + Y, Z) == compose(tensor(br(X, Z), ctx.id(Y)), tensor(ctx.id(X), br(Y, Z)))
    assert br(X, Y + Z) == compose(tensor(ctx.id(Y), br(X, Z)), tensor(br(X, Y), ctx.id(Z)))


def test_explicit_braiding_is_not_symmetric():
    ctx = Context(QQ, {"B1": 2, "B2": 2}, explicit_braiding())
    assert not ctx.is_symmetric()
    d = HopfDatum(ctx, example("triv").morphisms)
    with pytest.raises(ValueError):
        pi_dual(d)


@pytest.mark.parametrize("name", ["triv", "s3", "z4", "sweedler"])
def test_braiding_natural_on_generators(name):
    d = example(name)
    ctx = d.ctx
    for g in GENERATORS:
        f = d.morphism(g)
        for a in ("1", "2"):
            x = ctx.word(a)
            assert compose(ctx.braid(x, f.cod), tensor(ctx.id(x), f)) == \
                compose(tensor(f, ctx.id(x)), ctx.braid(x, f.dom))


# ---------------------------------------------------------------- row notation


def test_rows_equal_explicit_composition():
    d = example("s3")
    lhs = diagram(d, "21", "d d", "| x |", "lu ru")
    assert lhs == d.morphism("phi21")
    m = d.morphism
    direct = compose(tensor(m("mul"), m("mur")),
                     compose(tensor(tensor(d.ctx.id("2"), d.ctx.braid("2", "1")), d.ctx.id("1")),
                             tensor(m("d2"), m("d1"))))
    assert lhs == direct


def test_row_arity_error():
    d = example("triv")
    with pytest.raises(SignatureError):
        diagram(d, "12", "m")


# ---------------------------------------------------------------- relativization


def test_relativize_domain_with_trivial_coaction_collapses():
    d = example("triv")
    f = d.morphism("m2")                       # B2 B2 -> B2, slot 1 is B2, J empty
    rel = relativize_domain(f, 1, d)
    assert rel == diagram(d, "21", "| u2 |", "m |")
    assert rel == d.ctx.id("21")


def test_relativize_domain_z4_first_argument():
    d = example("z4")
    rel = relativize_domain(d.morphism("m2"), 0, d)   # B1 B2 -> B2 B1
    assert rel == diagram(d, "12", "u2 | |", "| x", "m |")


def test_relativize_domain_empty_tail_is_postcomposition_with_nul():
    d = example("sweedler")
    f = d.morphism("mul")                      # B2 B1 -> B1
    g = compose(f, d.ctx.braid("1", "2"))      # B1 B2 -> B1, last slot B2
    rel = relativize_domain(g, 1, d)
    direct = compose(tensor(g, d.ctx.id("1")), tensor(d.ctx.id("1"), d.morphism("nul")))
    assert rel == direct


def test_relativize_codomain_with_trivial_action_collapses():
    d = example("triv")
    rel = relativize_codomain(d.morphism("d1"), 0, d)  # B2 B1 -> B2 B1
    assert rel == d.ctx.id("21")


def test_relativize_rejects_wrong_letter():
    d = example("z4")
    with pytest.raises(SignatureError, match="slot 0"):
        relativize_domain(d.morphism("m1"), 0, d)
    with pytest.raises(SignatureError, match="slot 0"):
        relativize_codomain(d.morphism("d2"), 0, d)


# ---------------------------------------------------------------- pi rotation


@pytest.mark.parametrize("g", GENERATORS)
def test_pi_rotation_involution(g):
    f = example("sweedler").morphism(g)
    assert pi_rotate(pi_rotate(f)) == f


def test_pi_rotation_of_identity_and_flip():
    ctx = flip_ctx(2, 3)
    w = ctx.word("12")
    assert pi_rotate(ctx.id(w)) == ctx.id(w.reversed())
    assert pi_rotate(ctx.braid("1", "2")) == ctx.braid("1", "2")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_pi_rotation_is_contravariant_monoidal(seed):
    rng = random.Random(seed)
    field = rng.choice([QQ, GF(2), GF(3)])

    def rnd(n, m):
        return Mor(plain(m), plain(n), {j: {i: rng.randint(-2, 2) for i in range(n)}
                                        for j in range(m)}, field)

    a, b, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
    f, g = rnd(a, b), rnd(b, c)
    assert pi_rotate(compose(f, g)) == compose(pi_rotate(g), pi_rotate(f))
    h = rnd(c, a)
    assert pi_rotate(tensor(f, h)) == tensor(pi_rotate(h), pi_rotate(f))
