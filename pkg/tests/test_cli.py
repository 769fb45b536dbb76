import json

from arrlab.cli import main
from arrlab.fixtures import arrangement_path, matroid_path

TRIANGLE = str(arrangement_path("triangle"))
QA = str(arrangement_path("qa"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json_byte_stable(capsys):
    code1, out1, _ = run(capsys, "analyze", TRIANGLE)
    code2, out2, _ = run(capsys, "analyze", TRIANGLE)
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["schema"] == 1
    assert report["weak_combinatorics"] == [3, 3]
    assert report["syzygy"]["classification"] == "Free"
    assert report["syzygy"]["exponents"] == [1, 1]
    assert "_timing_seconds" not in out1


def test_analyze_text_format(capsys):
    code, out, _ = run(capsys, "analyze", TRIANGLE, "--format", "text")
    assert code == 0
    assert "exponents (1, 1)" in out and "elapsed" in out


def test_analyze_skip_syzygy(capsys):
    code, out, _ = run(capsys, "analyze", QA, "--skip-syzygy")
    assert code == 0
    report = json.loads(out)
    assert report["syzygy"] is None
    assert report["weak_combinatorics"] == [13, 16, 6, 4, 2]
    assert report["filters"]["divisionally_free"] is False
    assert report["charpoly"]["display"] == "(t-6)^2"


def test_analyze_missing_and_malformed(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.json"))
    assert code == 2
    assert json.loads(err)["error"]["type"] == "MalformedInput"
    bad = tmp_path / "bad.json"
    bad.write_text("{notjson")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2


def test_analyze_batch(capsys, tmp_path):
    indir = tmp_path / "in"
    outdir = tmp_path / "out"
    indir.mkdir()
    for name in ("triangle", "qa"):
        (indir / f"{name}.json").write_text(arrangement_path(name).read_text())
    code, out, _ = run(capsys, "analyze", "--batch", str(indir),
                       "--output-dir", str(outdir), "--skip-syzygy")
    assert code == 0
    assert (outdir / "triangle.json").exists()
    assert (outdir / "QA.json").exists()
    report = json.loads((outdir / "QA.json").read_text())
    assert report["weak_combinatorics"] == [13, 16, 6, 4, 2]


def test_compare_self_relabeled(capsys, tmp_path):
    # triangle against itself: isomorphic, no verdict fires
    code, out, _ = run(capsys, "compare", TRIANGLE, TRIANGLE)
    assert code == 0
    res = json.loads(out)
    assert res["flags"]["isomorphic_matroids"] is True
    assert res["flags"]["same_resolution_shape"] is True
    assert not any(res["verdicts"].values())


def test_compare_is_symmetric(capsys, tmp_path):
    np5 = tmp_path / "np5.json"
    np5.write_text(json.dumps({"label": "np5", "lines": [
        [["1", "0"], ["0", "0"], ["0", "0"]],
        [["0", "0"], ["1", "0"], ["0", "0"]],
        [["1", "0"], ["1", "0"], ["0", "0"]],
        [["1", "0"], ["-1", "0"], ["0", "0"]],
        [["0", "0"], ["0", "0"], ["1", "0"]]]}))
    _, out_ab, _ = run(capsys, "compare", TRIANGLE, str(np5))
    _, out_ba, _ = run(capsys, "compare", str(np5), TRIANGLE)
    ab, ba = json.loads(out_ab), json.loads(out_ba)
    assert ab["flags"] == ba["flags"]
    assert ab["verdicts"] == ba["verdicts"]
    assert ab["left"] == ba["right"] and ab["right"] == ba["left"]


def test_matroid_charpoly_literal(capsys):
    code, out, _ = run(capsys, "matroid", "charpoly", "(10;21,1,0,0,0,1)")
    assert code == 0
    res = json.loads(out)
    assert res["charpoly"]["display"] == "(t-4)(t-5)"
    assert res["multiplicity_lemma"] == "NonFree"
    assert res["divisionally_free"] is None


def test_matroid_filters_inconclusive(capsys):
    code, out, _ = run(capsys, "matroid", "filters", "(13;16,6,4,2)")
    assert code == 0
    assert json.loads(out)["multiplicity_lemma"] == "Inconclusive"


def test_matroid_from_arrangement(capsys):
    code, out, _ = run(capsys, "matroid", "from-arrangement", QA)
    assert code == 0
    res = json.loads(out)
    assert res["n"] == 13 and res["valid"] is True
    assert res["divisionally_free"] is False
    assert len(res["nonbases"]) == 42


def test_matroid_validate_and_iso(capsys, tmp_path):
    code, out, _ = run(capsys, "matroid", "validate", str(matroid_path("m1")))
    assert code == 0 and json.loads(out)["valid"] is True
    relabeled = tmp_path / "m1r.json"
    obj = json.loads(matroid_path("m1").read_text())
    perm = {i: 13 - i for i in range(1, 13)}
    obj["nonbases"] = [sorted(perm[x] for x in t) for t in obj["nonbases"]]
    relabeled.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "matroid", "iso", str(matroid_path("m1")),
                       str(relabeled))
    assert code == 0
    res = json.loads(out)
    assert res["isomorphic"] is True and len(res["witness"]) == 12
    code, out, _ = run(capsys, "matroid", "iso", str(matroid_path("m1")),
                       str(matroid_path("m2")))
    assert code == 0 and json.loads(out)["isomorphic"] is False


def test_realize_explicit_point(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "zacharias", "e=2",
                       "--output-dir", str(tmp_path))
    assert code == 0
    res = json.loads(out)
    assert res["points"][0]["verification"] == "matroid-verified"
    written = tmp_path / "zacharias.json"
    assert written.exists()
    report = json.loads(written.read_text())
    assert len(report["lines"]) == 12


def test_realize_excluded_parameter(capsys, tmp_path):
    code, _, err = run(capsys, "realize", "zacharias", "e=1",
                       "--output-dir", str(tmp_path))
    assert code == 2
    assert json.loads(err)["error"]["type"] == "ExcludedParameter"


def test_realize_sampling(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "m1", "--sample", "singular", "2",
                       "--seed", "1", "--output-dir", str(tmp_path))
    assert code == 0
    res = json.loads(out)
    assert len(res["points"]) == 2
    for entry in res["points"]:
        assert entry["verification"] == "matroid-verified"
        assert "SingularLocus" in entry["components"]
    assert (tmp_path / "m1_0.json").exists() and (tmp_path / "m1_1.json").exists()


def test_realize_unknown_family(capsys):
    code, _, err = run(capsys, "realize", "nosuch", "e=1")
    assert code == 2
