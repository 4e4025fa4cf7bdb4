import io
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from test_diagram_engine import explicit_braiding
from xbialg import (
    GF, QQ, Context, DatumFormatError, HopfDatum, check_counital, dumps, example,
    load, loads, random_datum, save,
)
from xbialg.cli import main
from xbialg.gallery import EXAMPLES, random_perturbation


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# ---------------------------------------------------------------- gallery


def test_unknown_example_lists_choices():
    with pytest.raises(KeyError, match="sweedler"):
        example("nope")


@pytest.mark.parametrize("name", EXAMPLES)
def test_examples_are_named(name):
    assert example(name).name == name


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(3), GF(5)]), st.integers(0, 10**6))
def test_random_data_keep_unit_and_counit_laws(field, seed):
    # the noise may break (co)associativity, never a (co)unit identity
    d = random_datum(field, random.Random(seed))
    lines = [l for l in check_counital(d) if l.id.startswith("hp1.")]
    assert len(lines) == 22
    assert all(l.passed for l in lines)


def test_perturbation_vanishes_on_units():
    d = example("s3")
    rng = random.Random(3)
    p = random_perturbation(d, "sigma", rng)
    # sigma(1, -) and sigma(-, 1) sit at columns 0..1 and 0, 2, 4
    for j in (0, 1, 2, 4):
        assert p.column(j) == {}


# ---------------------------------------------------------------- datum files


@pytest.mark.parametrize("name", EXAMPLES)
def test_round_trip_is_byte_identical(name, tmp_path):
    d = example(name)
    path = tmp_path / f"{name}.json"
    save(d, path)
    e = load(path)
    assert e == d and e.name == name
    assert dumps(e) == path.read_text()


def test_fraction_entries_round_trip():
    d = example("z4")
    text = dumps(d).replace('"eps1": [\n      ["1", "1"]', '"eps1": [\n      ["1", "1/3"]', 1)
    e = loads(text)
    assert e.morphism("eps1").column(1) == {0: Fraction(1, 3)}
    assert '"1/3"' in dumps(e)


def test_fraction_without_value_in_gf3_is_rejected():
    text = dumps(example("z4")).replace('"Q"', '"GF(3)"', 1)
    text = text.replace('["1", "1"]', '["1", "1/3"]', 1)
    with pytest.raises(DatumFormatError, match="eps1"):
        loads(text)


def test_wrong_shape_names_the_morphism():
    obj = json.loads(dumps(example("z4")))
    obj["morphisms"]["mur"] = [["1"]]
    with pytest.raises(DatumFormatError, match="'mur': dimension mismatch, expected 2x4"):
        loads(json.dumps(obj))


@pytest.mark.parametrize("edit, message", [
    (lambda o: o.pop("b1_dim"), "missing field 'b1_dim'"),
    (lambda o: o.update(b2_dim=0), "positive integer"),
    (lambda o: o.update(braiding="twist"), "unknown kind"),
    (lambda o: o["morphisms"].pop("rho"), "missing 'rho'"),
    (lambda o: o["morphisms"].update(tau=[]), "unknown names"),
    (lambda o: o.update(field="GF(4)"), "field 'field'"),
])
def test_format_errors(edit, message):
    obj = json.loads(dumps(example("triv")))
    edit(obj)
    with pytest.raises(DatumFormatError, match=message):
        loads(json.dumps(obj))


def test_json_syntax_error_reports_position():
    with pytest.raises(DatumFormatError, match="line 2 column"):
        loads('{\n  "field" "Q"\n}')


def test_sign_braiding_file_round_trip():
    d = random_datum(GF(3), random.Random(5), braiding="sign")
    text = dumps(d)
    assert '"b1_degrees"' in text
    e = loads(text)
    assert e == d
    assert dumps(e) == text


def test_explicit_braiding_file_round_trip():
    ctx = Context(QQ, {"B1": 2, "B2": 2}, explicit_braiding())
    d = HopfDatum(ctx, example("triv").morphisms, name="q")
    text = dumps(d)
    assert '"braiding_generators"' in text
    e = loads(text)
    assert e.ctx.braid("1", "1") == ctx.braid("1", "1")
    assert dumps(e) == text


def test_singular_explicit_generator_is_rejected():
    ctx = Context(QQ, {"B1": 2, "B2": 2}, explicit_braiding())
    obj = json.loads(dumps(HopfDatum(ctx, example("triv").morphisms)))
    obj["braiding_generators"]["psi_11"] = [["0"] * 4 for _ in range(4)]
    with pytest.raises(DatumFormatError, match="not invertible"):
        loads(json.dumps(obj))


# ---------------------------------------------------------------- command line


def test_cli_check_example():
    code, out = run("check", "--strong", "z4")
    assert code == 0
    assert "strong.combo.left PASS" in out
    assert "FAIL" not in out


def test_cli_check_saved_file(tmp_path):
    path = tmp_path / "z4.json"
    assert run("example", "z4", "--save", str(path))[0] == 0
    code, out = run("check", str(path), "--lemmas", "--replay")
    assert code == 0
    assert out.splitlines()[-1] == "replay.beta0 PASS"


def test_cli_check_failing_file(tmp_path):
    obj = json.loads(dumps(example("z4")))
    obj["morphisms"]["mul"] = [["0"] * 4 for _ in range(2)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out = run("check", str(path))
    assert code == 1
    assert "hp1.mul-unit-left FAIL row=0 col=0" in out


def test_cli_classify():
    code, out = run("classify", "z4")
    assert code == 0
    assert out.splitlines()[0] == "..*..."
    code, out = run("classify", "-v", "sweedler")
    assert out.splitlines()[0] == "*...*."
    assert "alg-coalg-triv.8 PASS" in out


def test_cli_enumerate_boxes():
    assert run("enumerate-boxes") == (0, "64 16 112\n")


def test_cli_extract(tmp_path):
    path = tmp_path / "out.json"
    code, out = run("extract", "s3", "--save", str(path))
    assert code == 0
    assert out.splitlines()[0] == "extract.round-trip PASS"
    assert load(path) == example("s3")


def test_cli_build_and_override(tmp_path):
    code, out = run("build", "sweedler", "--show")
    assert code == 0 and "bialg.delta-m PASS" in out and "m =" in out
    obj = json.loads(dumps(example("z4")))
    obj["morphisms"]["sigma"][0][0] = "0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out = run("build", str(path))
    assert code == 1 and "preflight failed" in out
    code, out = run("build", str(path), "--override")
    assert out.splitlines()[0] == "unverified"


def test_cli_input_errors(tmp_path, capsys):
    assert run("check", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("check", str(bad))[0] == 2
    assert run("example", "nope")[0] == 2
    assert "xbialg: error" in capsys.readouterr().err
