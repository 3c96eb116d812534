import json

import pytest

from dwcat import catalog as cat
from dwcat import gerbes as Gb
from dwcat.cli import main


def run_json(capsys, *argv):
    assert main(list(argv) + ["--json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_closed_s3(capsys):
    out = run_json(capsys, "dw", "closed", "--complex", "s3", "--group", "z2")
    assert out["Z"] == "1/2"


def test_cohomology_torus(capsys):
    out = run_json(capsys, "cohomology", "--complex", "t2", "--modulus", "3", "--degree", "1")
    assert out["pi0"] == "Z/3" and out["pi1_factors"] == ["3", "3"]


def test_gerbe_trivialize_zero(capsys):
    out = run_json(capsys, "gerbe", "trivialize", "--cover", "circle3")
    assert out["trivial"] and set(out["labels"].values()) == {0}


def test_gerbe_from_file(tmp_path, capsys):
    U = Gb.star_cover(cat.load_complex("t2"))
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"modulus": 3, "labels": {}, "theta": {}}))
    out = run_json(capsys, "gerbe", "trivialize", "--cover", "star_t2", "--gerbe", str(p))
    assert out["trivial"] and len(out["labels"]) == U.n


def test_surface_dimension(capsys):
    out = run_json(capsys, "dw", "surface", "--complex", "t2min", "--group", "s3")
    assert out["dim"] == 8


def test_cobordism_identity(capsys):
    out = run_json(capsys, "dw", "cobordism", "--complex", "cyl_s2", "--group", "z3")
    assert out["shape"] == [1, 1] and out["matrix"] == [["1"]]


def test_cap_command(capsys):
    out = run_json(capsys, "cap", "--complex", "t2", "--modulus", "2", "--degree", "1")
    # pi_0 H^1 with line coefficients is H^2(T^2; Z/2) = Z/2, capped to H_0
    assert out["generators"] == [{"class": [1], "cap": [1]}]


def test_check_one_group(capsys):
    out = run_json(capsys, "dw", "check", "--group", "z2")
    assert out["ok"] and out["checked"] > 0


def test_json_is_byte_identical(capsys):
    argv = ["dw", "surface", "--complex", "t2min", "--group", "z2cube", "--cocycle", "typeIII", "--json"]
    outs = []
    for _ in range(2):
        assert main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_text_output(capsys):
    assert main(["dw", "closed", "--complex", "t3", "--group", "z2"]) == 0
    assert "Z: 4" in capsys.readouterr().out


def test_exit_codes(capsys):
    assert main(["nope"]) == 2
    assert main(["dw", "closed", "--complex", "nosuch", "--group", "z2"]) == 1
    assert main(["dw", "closed", "--complex", "s3", "--group", "z2", "--cocycle", "p7"]) == 1
    assert main(["dw", "cobordism", "--complex", "cyl_s2", "--group", "z2", "--in", "t2"]) == 1
    assert main(["gerbe", "bogus"]) == 1
    capsys.readouterr()


def test_catalog_override(tmp_path, monkeypatch, capsys):
    cat.write_builtin(tmp_path)
    monkeypatch.setenv("DWCAT_CATALOG", str(tmp_path))
    assert cat.catalog_dir() == tmp_path
    assert cat.cocycles_for("z4") == ["trivial", "p1", "p2", "p3"]
    # a group only the override knows about
    data = cat.group_to_json(cat.load_group("z3"))
    (tmp_path / "groups" / "myz3.json").write_text(json.dumps(data))
    assert cat.load_group("myz3").order == 3
    out = run_json(capsys, "dw", "closed", "--complex", "s3", "--group", "myz3")
    assert out["Z"] == "1/3"


def test_builtin_files_match_generator(tmp_path):
    cat.write_builtin(tmp_path)
    for sub in ("groups", "cocycles"):
        for p in (tmp_path / sub).glob("*.json"):
            assert p.read_text() == (cat.BUILTIN / sub / p.name).read_text()


def test_cocycles_are_validated_on_load(tmp_path, monkeypatch):
    cat.write_builtin(tmp_path)
    monkeypatch.setenv("DWCAT_CATALOG", str(tmp_path))
    G = cat.load_group("z3")
    bad = {"group": "z3", "name": "bad", "degree": 3, "modulus": 3, "values": {"1,1,1": 1}}
    (tmp_path / "cocycles" / "z3_bad.json").write_text(json.dumps(bad))
    with pytest.raises(ValueError):
        cat.load_cocycle("bad", G, "z3")
    oob = dict(bad, values={"1,1,5": 1})
    (tmp_path / "cocycles" / "z3_oob.json").write_text(json.dumps(oob))
    with pytest.raises(cat.CatalogError):
        cat.load_cocycle("oob", G, "z3")
    with pytest.raises(cat.CatalogError):
        cat.load_cocycle("p1", G, "z3", degree=2)
    with pytest.raises(ValueError):
        cat.load_cocycle(str(tmp_path / "cocycles" / "z2_p1.json"), G, "z3")


def test_load_gerbe_rejects_unordered_keys(tmp_path):
    U = Gb.circle3()
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"modulus": 2, "labels": {"1,0": 1}}))
    with pytest.raises(cat.CatalogError):
        cat.load_gerbe(p, U)
    p.write_text("{not json")
    with pytest.raises(cat.CatalogError):
        cat.load_gerbe(p, U)


def test_unknown_names():
    with pytest.raises(cat.CatalogError):
        cat.load_group("z99x")
    with pytest.raises(cat.CatalogError):
        cat.load_cover("nosuch")
    with pytest.raises(cat.CatalogError):
        cat.load_complex("nosuch")
