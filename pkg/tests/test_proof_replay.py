import pytest

from xbialg import GF, ProofArtifacts, compose, example, lemma_suite, replay_dressing
from xbialg.gallery import example_s3, example_sweedler
from xbialg.proof_replay import LEMMAS, PI_LEMMAS, REPLAY

GALLERY = ("triv", "s3", "z4", "sweedler")


@pytest.fixture(scope="module")
def suites():
    return {n: (lemma_suite(example(n)), replay_dressing(example(n))) for n in GALLERY}


def test_lemma_table_is_well_formed():
    names = [i for i, _ in LEMMAS]
    assert len(names) == len(set(names)) == 81
    assert set(PI_LEMMAS) <= set(names)


@pytest.mark.parametrize("name", GALLERY)
def test_lemma_suite_shape(name, suites):
    lem, _ = suites[name]
    assert len(lem) == len(LEMMAS) + len(PI_LEMMAS)
    assert sum(i.endswith(".pi") for i in lem.ids()) == len(PI_LEMMAS)
    assert lem.passed, lem.failures()


@pytest.mark.parametrize("name", GALLERY)
def test_replay_shape(name, suites):
    _, rep = suites[name]
    expected = [i for i, _ in REPLAY]
    expected += [f"replay.T{k}.{s}" for s in "lr" for k in range(1, 5)]
    expected += ["replay.beta4", "replay.beta0"]
    assert rep.ids() == expected
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("ident", [
    "lemma.tau-delta.1", "lemma.tau-delta.2", "lemma.yi-red-adv2.2", "lemma.hat-sigma-Delta.1",
    "lemma.hat-sigma-Delta.2", "lemma.bra-ket-decomp.1", "lemma.phi-sigma.1.pi",
])
@pytest.mark.parametrize("name", GALLERY)
def test_individual_identities(ident, name, suites):
    assert suites[name][0][ident].passed


def test_gallery_over_finite_fields():
    for d in (example_s3(GF(5)), example_sweedler(GF(3))):
        assert lemma_suite(d).passed
        assert replay_dressing(d).passed


# ---------------------------------------------------------------- artifacts


def test_beta_chain_ends():
    d = example("z4")
    A = ProofArtifacts(d)
    assert A.beta(0, "l") == compose(d.morphism("d_B"), d.morphism("m_B"))
    assert A.beta(0, "l") == A.beta(0, "r")


def test_family_tokens_parse():
    A = ProofArtifacts(example("sweedler"))
    assert A["xi(0,1,2,0;0,0,0,0)"] == A.xi(0, 1, 2, 0, 0, 0, 0, 0)
    assert A["yi(0,1,2,2,1)"] == A.yi(0, 1, 2, 2, 1)
    assert A["iy*(1,1,2,0,2)"] == A.iy(1, 1, 2, 0, 2, star=True)
    assert "xi(1,1,2,2;2,0,0,1)" in A and "tau3b" in A and "nonsense" not in A


def test_family_tokens_are_cached():
    A = ProofArtifacts(example("z4"))
    assert A["g3t"] is A["g3t"]


def test_bad_tokens():
    A = ProofArtifacts(example("z4"))
    with pytest.raises(KeyError):
        A["nonsense"]
    with pytest.raises(ValueError, match="i = 2"):
        A["iy*(1,1,2,0,1)"]
    with pytest.raises(ValueError, match="j = 1"):
        A["yi*(0,1,2,0,2)"]
    with pytest.raises(TypeError):
        A["xi(1,2)"]


def test_named_boxes_iterate():
    A = ProofArtifacts(example("triv"))
    names = set(A)
    assert {"tau0t", "g0b", "b4l", "MB", "D010"} <= names
    assert len(A) == len(names)
