"""Acceptance suite: one group of tests per criterion.

Every test carries ``@pytest.mark.criterion(n, title)``; the terminal
summary prints one PASS/FAIL line per criterion.
"""
import random
import time

import pytest

from corpus import CORPUS, ENCODINGS
from oracles import transported
from xbialg import (
    DECLARED_BOXES, EXAMPLES, GF, Mor, alg_coalg_triv, build_bialgebra,
    check_all, check_bialgebra, check_cocycle_projections, check_compatibilities,
    check_counital, check_factorization_axioms, check_grid, check_naturality,
    check_projection_system, check_strong, check_strong_projections, classify,
    enumerate_boxes, evaluate, example, extract_datum, lemma_suite, parse_expr, pi_dual,
    print_expr, random_datum, replay_dressing,
)
from xbialg.diagram_engine import DERIVED, GENERATORS, typecheck
from xbialg.universal import pi_dual_system

GALLERY = tuple(EXAMPLES)


def crit(n, title):
    return pytest.mark.criterion(n, title)


# ---------------------------------------------------------------- 1


@crit(1, "box counts 64 16 112 in under 1 ms")
def test_counting_facts():
    t0 = time.perf_counter()
    counts = enumerate_boxes()
    elapsed = time.perf_counter() - t0
    assert (counts.total, counts.cocycle_free, counts.with_duals) == (64, 16, 112)
    assert str(counts) == "64 16 112"
    assert elapsed < 1e-3


# ---------------------------------------------------------------- 2


@crit(2, "gallery passes counital, compatibilities, strong and the bialgebra laws in under 5 s")
def test_gallery_builds_are_bialgebras():
    t0 = time.perf_counter()
    reports = {}
    for name in GALLERY:
        d = example(name)
        reports[name] = (check_counital(d), check_compatibilities(d), check_strong(d),
                         check_bialgebra(build_bialgebra(d)))
    elapsed = time.perf_counter() - t0
    for name, (cu, cp, st, bi) in reports.items():
        assert len(cu) >= 28 and cu.passed, (name, cu.failures())
        assert len(cp) >= 14 and cp.passed, (name, cp.failures())
        assert len(st) == 8 and st.passed, (name, st.failures())
        assert len(bi) == 8 and bi.passed, (name, bi.failures())
    assert elapsed < 5.0


# ---------------------------------------------------------------- 3


@crit(3, "builds equal QZ4, QS3, Q[Z2xZ2] and H4 under Lambda")
@pytest.mark.parametrize("name", GALLERY)
def test_known_bialgebra_oracles(name, built):
    B = built[name]
    m, eta, d, eps = transported(B, name)
    assert B.m.first_difference(m) is None
    assert B.eta == eta
    assert B.d.first_difference(d) is None
    assert B.eps == eps


# ---------------------------------------------------------------- 4


@crit(4, "extract(build(d), canonical P) = d and the grid morphisms agree")
@pytest.mark.parametrize("name", GALLERY)
def test_round_trip(name, gallery, built, canonical):
    d, B, P = gallery[name], built[name], canonical[name]
    e = extract_datum(B, P)
    assert e.first_difference(d) is None
    assert e == d
    grid = check_grid(d, B, P)
    assert len(grid) == 16
    assert grid.passed, grid.failures()


# ---------------------------------------------------------------- 5


@crit(5, "canonical projection systems pass every projection identity")
@pytest.mark.parametrize("name", GALLERY)
def test_projection_suites(name, built, canonical):
    B, P = built[name], canonical[name]
    rep = check_projection_system(B, P) + check_cocycle_projections(B, P) \
        + check_strong_projections(B, P)
    ids = rep.ids()
    for prefix in ("pi-rel1.", "cons-proj-cycle1.", "techn2-cond.gamma", "techn2-cond.delta",
                   "alt-gamma.beta", "pi-strong."):
        assert any(i.startswith(prefix) for i in ids), prefix
    assert sum(i.startswith("pi-strong.") and i.endswith(".pi") for i in ids) == 4
    assert rep.passed, rep.failures()


# ---------------------------------------------------------------- 6


@crit(6, "lemma suite and dressing replay pass; final line agrees with the bialgebra law")
def test_replay(gallery, built):
    t0 = time.perf_counter()
    for name in GALLERY:
        d = gallery[name]
        lem, rep = lemma_suite(d), replay_dressing(d)
        assert len(lem) >= 45 and lem.passed, (name, lem.failures())
        assert len(rep) >= 9 and rep.passed, (name, rep.failures())
        assert rep.ids()[-1] == "replay.beta0"
        assert rep["replay.beta0"].passed == check_bialgebra(built[name])["bialg.delta-m"].passed
    assert time.perf_counter() - t0 < 60.0


@crit(6, "lemma suite and dressing replay pass; final line agrees with the bialgebra law")
@pytest.mark.parametrize("seed", [0, 1, 5, 11])   # 5 and 11 break the law
def test_replay_final_line_matches_bialgebra_law_off_the_gallery(seed):
    rng = random.Random(seed)
    d = random_datum(GF(3), rng, max_dim=2, max_perturbed=2)
    B = build_bialgebra(d, override=True)
    assert replay_dressing(d)["replay.beta0"].passed == check_bialgebra(B)["bialg.delta-m"].passed


# ---------------------------------------------------------------- 7


def bump_first_nonzero(f):
    """``f`` with 1 added to its first nonzero entry, and that entry's (row, col)."""
    for j, col in f.columns():
        for i in sorted(col):
            cols = {jj: dict(c) for jj, c in f.columns()}
            cols[j][i] = cols[j][i] + 1
            return Mor(f.dom, f.cod, cols, f.field), (i, j)
    raise ValueError("zero morphism")


@crit(7, "+1 on any structure entry is caught with an id and a witness")
@pytest.mark.parametrize("name", GALLERY)
@pytest.mark.parametrize("gen", GENERATORS)
def test_mutation_sensitivity(name, gen, gallery):
    d = gallery[name]
    mutated, _ = bump_first_nonzero(d.morphism(gen))
    dm = d.replace(**{gen: mutated})
    rep = check_all(dm) + check_bialgebra(build_bialgebra(dm, override=True))
    failures = rep.failures()
    assert failures
    first = failures[0]
    assert first.id and len(first.residual) == 4
    assert str(first).startswith(f"{first.id} FAIL row=")


# ---------------------------------------------------------------- 8

CHECKERS = (check_naturality, check_counital, check_compatibilities, check_strong,
            check_factorization_axioms)


def pi_data():
    rng = random.Random(2024)
    data = [example(n) for n in GALLERY]
    data += [random_datum(GF(2) if k % 2 == 0 else GF(3), rng) for k in range(50)]
    return data


@crit(8, "pi_dual is an involution and every verdict is pi-invariant")
def test_pi_symmetry():
    data = pi_data()
    assert len(data) == 54
    for d in data:
        p = pi_dual(d)
        assert pi_dual(p) == d
        for check in CHECKERS:
            a, b = check(d), check(p)
            assert a.passed == b.passed, (d, check.__name__)
            assert len(a.failures()) == len(b.failures()), (d, check.__name__)


@crit(8, "pi_dual is an involution and every verdict is pi-invariant")
@pytest.mark.parametrize("name", GALLERY)
def test_pi_symmetry_of_built_systems(name, built, canonical):
    B, P = built[name], canonical[name]
    Bp, Pp = pi_dual_system(B, P)
    assert check_bialgebra(Bp).passed == check_bialgebra(B).passed
    assert check_projection_system(Bp, Pp).passed == check_projection_system(B, P).passed


# ---------------------------------------------------------------- 9


@crit(9, "classification flags agree with every projection-side criterion")
@pytest.mark.parametrize("name", GALLERY)
def test_classification_cross_validation(name, gallery, built, canonical):
    d = gallery[name]
    box = classify(d)
    assert str(box) == DECLARED_BOXES[name]
    rep = alg_coalg_triv(d, built[name], canonical[name])
    assert rep.ids() == [f"alg-coalg-triv.{k}" for k in range(1, 9)]
    assert rep.passed, rep.failures()
    assert box.cross_check is not None and box.cross_check.passed


# ---------------------------------------------------------------- 10


@crit(10, "print(parse(t)) = t on 30 texts; evaluate matches the derived morphisms")
def test_parser_round_trip():
    assert len(CORPUS) == 30
    names = {t for t in CORPUS if "(" not in t and "[" not in t}
    assert set(GENERATORS) | set(DERIVED) <= names
    assert {"id", "psi", "psi_inv"} <= {t.split("[")[0] for t in CORPUS}
    for text in CORPUS:
        e = parse_expr(text)
        assert print_expr(e) == text
        typecheck(e)


@crit(10, "print(parse(t)) = t on 30 texts; evaluate matches the derived morphisms")
@pytest.mark.parametrize("name", GALLERY)
def test_evaluate_matches_derived(name, gallery):
    d = gallery[name]
    der = d.derived
    for key, text in ENCODINGS.items():
        assert evaluate(parse_expr(text), d) == getattr(der, key), key
