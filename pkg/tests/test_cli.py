import json
import subprocess
import sys
from io import StringIO
from pathlib import Path

import pytest

from arrquiver.arrangement import coordinate_cross, enumerate_faces
from arrquiver.cli import run
from arrquiver.cousin import global_complex
from arrquiver.exactla import Field
from arrquiver.formats import (ParseError, parse_arrangement, parse_onedim, parse_quiver, serialize_arrangement,
                               serialize_onedim, serialize_quiver)
from arrquiver.onedim import to_B
from arrquiver.quiver import dual, validate
from samples import tran_broken, validated_samples

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out = StringIO()
    code = run([str(a) for a in argv], out)
    return code, out.getvalue()


def structured(cmd, *argv):
    # options go before any "--" separator
    code, text = call(cmd, "--format", "structured", *argv)
    return code, json.loads(text)


# formats

@pytest.mark.parametrize("name", ["line", "cross", "three_lines", "boolean3", "parallel"])
def test_arrangement_round_trip(name):
    text = (DATA / f"{name}.arr").read_text()
    a = parse_arrangement(text)
    assert parse_arrangement(serialize_arrangement(a)) == a


@pytest.mark.parametrize("path", sorted(DATA.glob("*.quiver")), ids=lambda p: p.stem)
def test_quiver_file_round_trip(path):
    q = parse_quiver(path.read_text())
    s = serialize_quiver(q)
    assert parse_quiver(s) == q
    assert serialize_quiver(parse_quiver(s)) == s


@pytest.mark.parametrize("name", sorted(validated_samples()))
def test_sample_quiver_round_trip(name):
    q = validated_samples()[name]
    assert parse_quiver(serialize_quiver(q)) == q


def test_prime_field_round_trip():
    text = "".join(l for l in (DATA / "line_constant.quiver").read_text().splitlines(True)
                   if not l.startswith("field"))
    q = parse_quiver(text, field=Field(3))
    s = serialize_quiver(q)
    assert "fp:3" in s and parse_quiver(s) == q


@pytest.mark.parametrize("path", sorted(DATA.glob("*.[pb]")), ids=lambda p: p.name)
def test_onedim_round_trip(path):
    obj = parse_onedim(path.read_text())
    assert parse_onedim(serialize_onedim(obj)) == obj
    if path.suffix == ".p":
        b = to_B(obj)
        assert parse_onedim(serialize_onedim(b)) == b


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError, match=r"line 3"):
        parse_arrangement("dim 2\nmode linear\n1 x\n")
    with pytest.raises(ParseError, match=r"line 4, column 3"):
        parse_arrangement("dim 2\nmode linear\n1 0\n0 1/0\n")
    with pytest.raises(ParseError):
        parse_arrangement("dim 2\nmode affine\n1 0 | 0\n", mode="linear")


# commands

def test_faces_table_golden():
    code, out = call("faces", DATA / "cross.arr")
    assert code == 0
    assert out.splitlines() == [
        "9 faces", "signs\tdim\tinterior point",
        "00\t0\t(0, 0)", "0+\t1\t(0, 1)", "0-\t1\t(0, -1)",
        "+0\t1\t(1, 0)", "++\t2\t(1, 1)", "+-\t2\t(1, -1)",
        "-0\t1\t(-1, 0)", "-+\t2\t(-1, 1)", "--\t2\t(-1, -1)",
    ]


@pytest.mark.parametrize("name,count", [("line", 3), ("cross", 9), ("three_lines", 13), ("boolean3", 27),
                                        ("parallel", 5)])
def test_faces_counts(name, count):
    code, rep = structured("faces", DATA / f"{name}.arr")
    assert code == 0 and rep["count"] == count


def test_output_is_deterministic():
    for argv in (("faces", DATA / "boolean3.arr"), ("validate", DATA / "three_lines_tran_broken.quiver"),
                 ("groupoid", DATA / "three_lines.arr", "--presentation", "collinearity")):
        assert call(*argv) == call(*argv)
        assert structured(*argv) == structured(*argv)


def test_compose_and_collinear():
    code, out = call("compose", DATA / "cross.arr", "0+", "+-")
    assert code == 0 and out.strip() == "0+ o +- = ++"
    assert call("collinear", DATA / "cross.arr", "mm", "00", "pp")[0] == 0
    assert call("collinear", DATA / "cross.arr", "--", "-+", "00", "+-")[0] == 0
    code, out = call("collinear", DATA / "cross.arr", "00", "0+", "++")
    assert code == 1 and out.strip().endswith("no")


def test_validate_exit_codes():
    assert call("validate", DATA / "line_constant.quiver")[0] == 0
    code, out = call("validate", DATA / "line_mon_broken.quiver")
    assert code == 1 and "Mon (0, +)" in out
    code, out = call("validate", DATA / "line_inv_broken.quiver")
    assert code == 1 and "Inv (-, +)" in out
    code, rep = structured("validate", DATA / "three_lines_tran_broken.quiver")
    assert code == 1 and rep["tran"] and not rep["mon"] and not rep["inv"]


def test_verdicts_match_library():
    for path in sorted(DATA.glob("*.quiver")):
        q = parse_quiver(path.read_text())
        code, rep = structured("validate", path)
        assert rep["verdict"] == validate(q).verdict
        assert code == (0 if rep["verdict"] else 1)


def test_cousin_outputs():
    code, out = call("cousin", DATA / "line_skyscraper.quiver")
    assert code == 0 and out.splitlines()[-1] == "H^0: 0, H^1: 1"
    code, rep = structured("cousin", DATA / "three_lines_constant2.quiver")
    q = parse_quiver((DATA / "three_lines_constant2.quiver").read_text())
    assert rep["cohomology"] == list(global_complex(q).cohomology()) == [2, 0, 0]


def test_audits():
    for cmd in ("stalks", "smooth", "perversity"):
        assert call(cmd, DATA / "cross_local.quiver")[0] == 0
    assert call("smooth", DATA / "line_inv_broken.quiver")[0] == 1
    assert call("perversity", DATA / "three_lines_tran_broken.quiver")[0] == 1
    assert call("stalks", DATA / "three_lines_tran_broken.quiver")[0] == 1


def test_functor_commands():
    src = DATA / "cross_local.quiver"
    q = parse_quiver(src.read_text())
    code, out = call("dual", src)
    assert code == 0 and parse_quiver(out) == dual(q)
    code, out = call("restrict", src, "ambient")
    assert code == 0 and parse_quiver(out) == q
    code, out = call("restrict", src, "0")
    assert code == 0 and validate(parse_quiver(out)).verdict
    code, out = call("slice", src, "++")
    assert code == 0 and parse_quiver(out).dims == (q.dims[q.poset.find("++")],)


def test_mult():
    code, rep = structured("mult", DATA / "line_skyscraper.quiver")
    assert code == 0
    assert {tuple(r["hyperplanes"]): r["multiplicity"] for r in rep["flats"]} == {(): 0, (0,): 1}


def test_groupoid_and_word():
    code, rep = structured("groupoid", DATA / "three_lines.arr")
    assert code == 0 and (len(rep["generators"]), len(rep["relations"])) == (12, 6)
    code, rep = structured("groupoid", DATA / "three_lines.arr", "--presentation", "collinearity")
    assert (len(rep["generators"]), len(rep["relations"])) == (30, 36)
    code, rep = structured("groupoid", DATA / "three_lines_tran_broken.quiver")
    assert code == 1 and rep["failed_relations"]
    assert call("groupoid", DATA / "three_lines_constant2.quiver")[0] == 0
    code, rep = structured("word", DATA / "three_lines.arr", "--", "++-", "--+")
    assert code == 0 and rep["length"] == rep["distance"] == 3


def test_onedim_commands():
    code, out = call("onedim", "to-B", DATA / "local_system_2.p")
    assert code == 0
    b = parse_onedim(out)
    code, out = call("onedim", "to-P", DATA / "constant.b")
    p = parse_onedim(out)
    assert (p.phi, p.psi) == (0, 1)
    code, out = call("onedim", "fourier", DATA / "constant.b")
    assert parse_onedim(out) == parse_onedim((DATA / "skyscraper.b").read_text())
    code, out = call("onedim", "to-quiver", DATA / "skyscraper.b")
    assert parse_quiver(out).dims == (1, 0, 0)
    assert b.e0 == 2
    assert call("onedim", "to-P", DATA / "local_system_2.p")[0] == 2


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.arr"
    bad.write_text("dim 2\nmode linear\n1 0\n0 1/0\n")
    assert call("faces", bad)[0] == 2
    assert "line 4, column 3" in capsys.readouterr().err
    assert call("faces", tmp_path / "missing.arr")[0] == 2
    assert call("faces", DATA / "cross.arr", "--mode", "affine")[0] == 2
    assert call("validate", DATA / "line_constant.quiver", "--field", "fp:4")[0] == 2
    assert call("compose", DATA / "cross.arr", "0+", "+++")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("restrict", DATA / "cross_local.quiver", "7")[0] == 2


def test_broken_sample_matches_data_file():
    q = parse_quiver((DATA / "three_lines_tran_broken.quiver").read_text())
    assert q == tran_broken()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "arrquiver", "faces", str(DATA / "line.arr")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("3 faces")
    assert enumerate_faces(coordinate_cross())
