import io
import json
import subprocess
import sys

import pytest

from charvar import cache
from charvar.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, run


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    yield tmp_path / "cache"
    cache.configure(None)


def call(*argv, cache_dir=None):
    out = io.StringIO()
    argv = list(argv)
    if cache_dir is not None:
        argv += ["--cache-dir", str(cache_dir)]
    code = run(argv, out)
    return code, out.getvalue()


def doc_of(*argv, cache_dir=None):
    code, text = call(*argv, cache_dir=cache_dir)
    assert code == EXIT_OK, text
    return json.loads(text)


def test_poincare_rank_one_torus(isolated_cache):
    d = doc_of("poincare", "--genus", "1", "--rank", "1", "--punctures", '[{"auto":true}]', cache_dir=isolated_cache)
    assert d["poincare"] == [[2, "1"], [3, "2"], [4, "1"]]
    assert d["dim"] == 2 and d["generic"] is True


def test_macdonald_two(isolated_cache):
    d = doc_of("macdonald", "--partition", "2", cache_dir=isolated_cache)
    assert d["htilde"] == {"s[2]": "1", "s[1,1]": "q"}
    assert doc_of("macdonald", "--partition", "[2]", cache_dir=isolated_cache) == d


def test_check_identities(isolated_cache):
    d = doc_of("check-identities", "--max-rank", "2", "--genus", "0", "--punctures", "3", cache_dir=isolated_cache)
    assert d["resolution_identity"] == "pass"
    assert d["twisted_trivial_eta"] == "pass"
    assert d["mixed_hodge_slices"] == "pass"
    assert d["checked"] > 0


def test_four_punctured_sphere_verbs(isolated_cache):
    pts = json.dumps([{"auto": True, "jordan": [[1], [1]]}] * 4)
    d = doc_of("poincare", "--rank", "2", "--punctures", pts, cache_dir=isolated_cache)
    assert d["poincare"] == [[2, "5"], [4, "1"]]
    assert doc_of("epoly", "--rank", "2", "--punctures", pts, cache_dir=isolated_cache)["epoly"] == [
        [0, "1"], [1, "4"], [2, "1"]]
    ss = doc_of("poincare-ss", "--nus", "[[1,1],[1,1],[1,1],[1,1]]", cache_dir=isolated_cache)
    assert ss["poincare"] == d["poincare"]
    tw = doc_of("twisted", "--rank", "2", "--punctures", pts, cache_dir=isolated_cache)
    assert tw["twisted"] == d["poincare"]


def test_mixed_hodge_is_flagged(isolated_cache):
    d = doc_of("mixed-hodge", "--genus", "1", "--rank", "1", "--punctures", '[{"auto":true}]', cache_dir=isolated_cache)
    assert d["conjectural"] is True
    assert d["variables"] == ["q", "v"]
    code, text = call("mixed-hodge", "--genus", "1", "--rank", "1", "--punctures", '[{"auto":true}]',
                      "--format", "pretty", cache_dir=isolated_cache)
    assert code == EXIT_OK and "conjectural" in text


def test_kernel_verb(isolated_cache):
    d = doc_of("kernel", "--n", "1", "--genus", "0", "--punctures", "2", cache_dir=isolated_cache)
    assert d["n"] == 1 and len(d["terms"]) == 1


def test_count_points_and_interpolation(isolated_cache):
    pts = json.dumps([{"auto": True, "jordan": [[1], [1]]}] * 4)
    d = doc_of("count-points", "--rank", "2", "--punctures", pts, "--q", "7,11,17", cache_dir=isolated_cache)
    assert [c["count"] for c in d["counts"]] == [q * q + 4 * q + 1 for q in (7, 11, 17)]
    assert d["interpolated_E"] == [[0, "1"], [1, "4"], [2, "1"]]
    one = doc_of("count-points", "--genus", "1", "--punctures", '[{"eigenvalues":[{"value":1}]}]', "--q", "5",
                 cache_dir=isolated_cache)
    assert one == {"q": 5, "count": 16}


def test_count_points_non_split_matches_fricke(isolated_cache):
    # x^2 + 1, {1, 2}, x^2 + 1, x^2 + x + 2 over F_3
    pts = [{"eigenvalues": [{"poly": [1, 0]}]}, {"eigenvalues": [{"value": 1}, {"value": 2}]},
           {"eigenvalues": [{"poly": [1, 0]}]}, {"eigenvalues": [{"poly": [2, 1]}]}]
    d = doc_of("count-points", "--punctures", json.dumps(pts), "--q", "3", cache_dir=isolated_cache)
    f = doc_of("fricke-count", "--q", "3", "--traces", "0,0,0,1", "--dets", "1,2,1", cache_dir=isolated_cache)
    assert d["count"] == f["count"] == 4


def test_fricke_count_verb(isolated_cache):
    d = doc_of("fricke-count", "--q", "3", "--traces", "0,0,0,0", cache_dir=isolated_cache)
    assert d["count"] == 10
    assert d["coefficients"] == {"A": 0, "B": 0, "C": 0, "D": -4}
    g = doc_of("fricke-count", "--q", "3", "--traces", "0,0,0,0", "--dets", "1,1,1", cache_dir=isolated_cache)
    assert g["count"] == 10


def test_csv_output(isolated_cache):
    code, text = call("poincare", "--genus", "1", "--rank", "1", "--punctures", '[{"auto":true}]',
                      "--format", "csv", cache_dir=isolated_cache)
    assert code == EXIT_OK
    assert text.splitlines() == ["exp,coeff", "2,1", "3,2", "4,1"]


def test_output_is_deterministic(isolated_cache):
    args = ("poincare", "--genus", "1", "--rank", "2", "--punctures", '[{"auto":true,"jordan":[[2]]}]')
    first = call(*args, cache_dir=isolated_cache)
    second = call(*args, cache_dir=isolated_cache)
    assert first == second
    text = first[1]
    assert text == json.dumps(json.loads(text), sort_keys=True, separators=(",", ":")) + "\n"


def test_file_argument(isolated_cache, tmp_path):
    f = tmp_path / "p.json"
    f.write_text('[{"auto":true}]')
    d = doc_of("poincare", "--genus", "1", "--rank", "1", "--punctures", "@" + str(f), cache_dir=isolated_cache)
    assert d["poincare"] == [[2, "1"], [3, "2"], [4, "1"]]


def test_validation_errors_exit_two(isolated_cache):
    pair = {"eigenvalues": [{"torsion": "0", "mult": 1}, {"torsion": "1/2", "mult": 1}]}
    code, text = call("poincare", "--punctures", json.dumps([pair, pair]), cache_dir=isolated_cache)
    assert code == EXIT_VALIDATION
    assert json.loads(text)["error"]["type"] == "GenericityError"
    code, text = call("poincare", "--rank", "1", "--punctures", "not json", cache_dir=isolated_cache)
    assert code == EXIT_VALIDATION and "error" in json.loads(text)
    code, _ = call("count-points", "--punctures", '[{"eigenvalues":[{"value":2}]}]', "--q", "5",
                   cache_dir=isolated_cache)
    assert code == EXIT_VALIDATION
    code, _ = call("fricke-count", "--q", "4", "--traces", "0,0,0,0", cache_dir=isolated_cache)
    assert code == EXIT_VALIDATION


def test_internal_error_exit_one(isolated_cache, monkeypatch):
    import charvar.cli as cli

    def boom(args):
        raise AssertionError("broken invariant")

    monkeypatch.setattr(cli, "cmd_fricke_count", boom)
    code, text = call("fricke-count", "--q", "3", "--traces", "0,0,0,0", cache_dir=isolated_cache)
    assert code == EXIT_INTERNAL
    assert json.loads(text)["error"]["type"] == "AssertionError"


def test_usage_errors_exit_64(isolated_cache, capsys):
    assert call("bogus")[0] == EXIT_USAGE
    assert call("poincare", "--nope")[0] == EXIT_USAGE
    assert call("poincare", "--punctures", "[]", "--format", "xml")[0] == EXIT_USAGE
    assert call()[0] == EXIT_USAGE


def test_console_entry_point(isolated_cache):
    proc = subprocess.run([sys.executable, "-m", "charvar", "macdonald", "--partition", "1,1",
                           "--cache-dir", str(isolated_cache)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["htilde"] == {"s[2]": "1", "s[1,1]": "t"}
    proc = subprocess.run([sys.executable, "-m", "charvar", "nope"], capture_output=True, text=True)
    assert proc.returncode == 64
