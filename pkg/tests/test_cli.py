import json

import pytest
from click.testing import CliRunner

from strandkit.cli import main
from support import golden_diff, load_golden

TAU_TOKENS = ("m(2,0>2,1@5) p(2,1@5) m(1,7@5>1,4@3) p(1,4-@3) m(1,4@3>1,3@2) p(1,3-@2) "
              "m(1,3@2>1,4@3) p(1,4-@3) m(1,4@3>1,3@2) p(1,3-@2) m(1,3@2>1,1@0) p(1,1@0) m(2,2@0>2,0)")
SIGMA_LINE = ("SFW[-] m(2,0>2,2@0) p(2,2@0) m(1,1@0>1,3@2) p(1,3+@2) m(1,3@2>1,4@3) p(1,4+@3) "
              "m(1,4@3>1,3@2) p(1,3-@2) m(1,3@2>1,1@0) p(1,1@0) m(2,2@0>2,0)")


def run(*args):
    res = CliRunner().invoke(main, list(args))
    return res.exit_code, res.output


@pytest.fixture
def arc_files(tmp_path):
    a = tmp_path / "sigma.txt"
    a.write_text(SIGMA_LINE + "\n")
    b = tmp_path / "tau.json"
    b.write_text(json.dumps({"tokens": TAU_TOKENS}))
    bad = tmp_path / "bad.txt"
    bad.write_text("m(1,1>2,3) q(7)\n")
    return str(a), str(b), str(bad)


def dump_diff(data):
    basis = data["basis"]
    return golden_diff([[r, c, basis[str(e)], x] for r, c, x, e in data["entries"]])


@pytest.fixture(scope="module")
def running_json():
    code, out = run("--format", "json", "example", "running")
    assert code == 0
    return json.loads(out)


def test_running_table(running_json):
    table = {r["rho"]: (r["int"], r["hom"]) for r in running_json["table"]}
    assert sorted(table) == list(range(-8, 9))
    assert table[0] == (2, 2) and table[-5] == (1, 1)
    assert all(v == (0, 0) for r, v in table.items() if r not in (0, -5))


def test_running_dg_dump_matches_golden(running_json):
    g = load_golden("running_dg.json")
    sig = running_json["dg_sigma"]
    assert [s["label"] for s in sig["summands"]] == g["sigma"]["labels"]
    assert dump_diff(sig) == golden_diff(g["sigma"]["entries"])
    perm = g["tau_printed"]["permutation"]
    tau = running_json["dg_tau"]
    assert [tau["summands"][perm[k]]["label"] for k in range(10)] == g["tau_printed"]["labels"]
    moved = {(perm[a], perm[b]): v for (a, b), v in golden_diff(g["tau_printed"]["entries"]).items()}
    assert dump_diff(tau) == moved


def test_running_biquiver_summary(running_json):
    bq = running_json["biquiver"]
    assert bq["vertices"] == 13 and len(bq["lines"]) == 7
    assert sum(1 for L in bq["lines"] if L["real_h"]) == 2


def test_running_text_output():
    code, out = run("example", "running")
    assert code == 0
    rows = [ln.split() for ln in out.splitlines() if ln.split()[:1] == ["0"]]
    assert rows == [["0", "2", "2"]]


def test_d4_example():
    code, out = run("--format", "json", "example", "d4")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 12 == len(data["arcs"])
    assert all(a["end"] == 1 for a in data["arcs"])


def test_unknown_example_exit_2():
    code, out = run("example", "a3")
    assert code == 2 and "UnknownExample" in out


def test_datum_quiver_json():
    code, out = run("--format", "json", "datum", "quiver", "running")
    assert code == 0
    q = json.loads(out)
    assert len(q["vertices"]) == 6 and len(q["arrows"]) == 7
    assert sorted(a["degree"] for a in q["arrows"]) == [-1, -1, 0, 0, 0, 0, 0]
    assert len(q["special"]) == 2


def test_datum_file_errors(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"polygons": [2], "pairs": [[[1, 1], [1, 1]]], "fixed": [], "gradings": [[0]]}))
    assert run("datum", "validate", str(p))[0] == 2
    assert run("datum", "validate", str(tmp_path / "missing.json"))[0] == 2
    assert run("datum", "validate", "running")[0] == 0


def test_bad_arc_file_exit_2(arc_files):
    _, _, bad = arc_files
    for cmd in (["arc", "encode", bad], ["int", "verify", bad], ["dg", "build", bad]):
        code, out = run(*cmd)
        assert code == 2 and "error:" in out


def test_bad_window_and_field(arc_files):
    a, b, _ = arc_files
    assert run("int", "count", a, b, "--rho-window", "3..1")[0] == 2
    assert run("--field", "p:9", "rep", "hom", a, b)[0] == 2


def test_int_count_and_dg_hom_agree(arc_files):
    a, b, _ = arc_files
    code, out = run("--format", "json", "int", "count", a, b, "--rho-window", "-8..8")
    assert code == 0
    ints = {r["rho"]: r["int"] for r in json.loads(out)}
    code, out = run("--format", "json", "dg", "hom", a, b, "--rho-window", "-8..8")
    assert code == 0
    homs = {r["rho"]: r["homdim"] for r in json.loads(out)}
    assert ints == homs and ints[0] == 2 and ints[-5] == 1


def test_verify_files_exit_0(arc_files):
    a, b, _ = arc_files
    code, out = run("--format", "json", "int", "verify", a, b, "--rho-window", "-2..2", "--no-summary")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4 * 5 and all(r["match"] for r in rows)
    assert set(rows[0]) == {"arcA", "arcB", "rho", "int", "homdim", "match"}


def test_verify_random_row_count_and_determinism():
    args = ["--seed", "1", "--format", "csv", "int", "verify", "--pairs", "200", "--max-crossings", "3",
            "--no-summary"]
    code, out = run(*args)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "arcA,arcB,rho,int,homdim,match"
    assert len(lines) - 1 == 200 * 13
    assert run(*args) == (code, out)


def test_verify_mismatch_exit_1(monkeypatch, arc_files):
    import strandkit.cli as cli
    a, _, _ = arc_files

    def broken(item):
        return [{"arcA": item[1], "arcB": item[2], "rho": 0, "int": 1, "homdim": 0, "match": False}]

    monkeypatch.setattr(cli, "_verify_item", broken)
    assert run("int", "verify", a, "--no-summary")[0] == 1


def test_enumerate_bounds():
    code, out = run("enumerate", "--max-crossings", "0")
    assert code == 0 and out == ""
    code, out = run("enumerate", "--max-crossings", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == len(set(lines)) > 0
    assert run("enumerate", "--max-crossings", "11")[0] == 2


def test_enumerate_output_is_canonical(tmp_path):
    code, out = run("enumerate", "--max-crossings", "2")
    p = tmp_path / "arcs.txt"
    p.write_text(out)
    code2, out2 = run("arc", "encode", str(p))
    assert code == code2 == 0
    words = [ln.split(None, 1)[1] for ln in out.splitlines()]
    assert [ln.split("  ")[-1].strip() for ln in out2.splitlines()[1:]] == words


def test_arc_canon_and_shift(arc_files):
    a, b, _ = arc_files
    code, out = run("--format", "json", "arc", "canon", b)
    assert code == 0 and json.loads(out)[0]["class"] == "AFW"
    code, out = run("--format", "json", "arc", "shift", a, "--by", "2")
    assert code == 0
    shifted = json.loads(out)[0]["letters"]
    assert shifted[0] == {"seg": [2, 0, 2], "r": None, "r2": 2}


def test_rep_commands_prime_field(arc_files):
    a, b, _ = arc_files
    code, out = run("--field", "p:7", "--format", "json", "rep", "hom", a, b)
    assert code == 0
    row = json.loads(out)[0]
    assert row["homdim"] == row["hlines"]
    code, out = run("--format", "json", "rep", "build", b)
    data = json.loads(out)
    assert code == 0 and data["bijective"]
    code, out = run("--format", "json", "rep", "hom", b, b)
    assert code == 0 and data["hom_to_word_rep"] == json.loads(out)[0]["homdim"]


def test_same_seed_same_bytes():
    args = ["--seed", "5", "--format", "json", "int", "verify", "--pairs", "5", "--no-summary"]
    assert run(*args) == run(*args)
    assert run(*args)[1] != run("--seed", "6", *args[2:])[1]
