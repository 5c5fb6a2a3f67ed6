"""The command line, run in process through cli.main."""

import json

import pytest

from ogq import cli, verify


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gw_text(capsys):
    code, out, err = run(
        ["gw", "--n", "2", "--g", "0", "--d", "1", "--insertions", "1;1;1"], capsys
    )
    assert code == 0
    assert out == "1\n"
    assert err == ""


def test_gw_json(capsys):
    code, out, _ = run(
        ["gw", "--n", "2", "--g", "0", "--d", "1", "--insertions", "1;1;1",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 2 and doc["g"] == 0 and doc["d"] == 1
    assert doc["insertions"] == ["1", "1", "1"]
    assert doc["value"] == "1"


def test_gw_trace_route(capsys):
    code, out, _ = run(
        ["gw", "--n", "2", "--g", "1", "--d", "1", "--insertions", "1;1", "--trace"],
        capsys,
    )
    assert code == 0
    assert out == "2\ntrace route: 2 (agree)\n"


def test_gw_float_mode(capsys):
    code, out, _ = run(
        ["gw", "--n", "2", "--g", "3", "--d", "1", "--mode", "float",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "8"
    assert doc["float_agrees"] is True
    assert abs(doc["float_value"] - 8.0) <= 1e-6 * 8.0


def test_gw_bad_partition(capsys):
    code, _, err = run(
        ["gw", "--n", "2", "--g", "0", "--d", "1", "--insertions", "1,a"], capsys
    )
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "invalid_input"


def test_missing_required_argument(capsys):
    code, _, err = run(["gw", "--n", "2"], capsys)
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "bad_arguments"


def test_count_text(capsys):
    code, out, _ = run(["count", "--g", "3", "--rank", "4", "--ell", "0"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "16"
    assert lines[1] == "e0 = -2, required w2 = 0 (mod 2)"
    assert any("matches catalogued" in line for line in lines[2:])


def test_count_json(capsys):
    code, out, _ = run(
        ["count", "--g", "3", "--rank", "4", "--ell", "0", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "ogq-count/1"
    assert doc["N"] == "16"
    assert doc["applicable"] is True


def test_count_float_mode(capsys):
    code, out, _ = run(
        ["count", "--g", "5", "--rank", "6", "--ell", "0", "--mode", "float"], capsys
    )
    assert code == 0
    assert out.splitlines()[0] == "2048"
    assert "(agree)" in out


def test_count_not_covered_exits_3(capsys):
    code, out, _ = run(["count", "--g", "2", "--rank", "3", "--ell", "0"], capsys)
    assert code == 3
    assert "not covered" in out
    assert "2^g" in out


def test_count_not_applicable_exits_3(capsys):
    code, out, _ = run(["count", "--g", "4", "--rank", "6", "--ell", "0"], capsys)
    assert code == 3
    assert "not applicable" in out


def test_count_odd_rank_odd_ell_exits_2(capsys):
    code, _, err = run(["count", "--g", "3", "--rank", "3", "--ell", "1"], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "invalid_input"


def test_table_writes_cache(tmp_path, capsys):
    code, out, _ = run(
        ["table", "--n", "2", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 0
    path = tmp_path / "table-n2.json"
    assert path.exists()
    doc = json.loads(path.read_text())
    assert doc["schema"] == "ogq-table/1"
    assert doc["n"] == 2
    assert f"-> {path}" in out


def test_table_output_is_byte_stable(tmp_path, capsys):
    argv = ["table", "--n", "2", "--cache-dir", str(tmp_path)]
    run(argv, capsys)
    first = (tmp_path / "table-n2.json").read_bytes()
    run(argv, capsys)
    second = (tmp_path / "table-n2.json").read_bytes()
    assert first == second


def test_table_warns_on_stale_cache(tmp_path, capsys):
    path = tmp_path / "table-n2.json"
    path.write_text(json.dumps({"schema": "something-else"}))
    code, _, err = run(["table", "--n", "2", "--cache-dir", str(tmp_path)], capsys)
    assert code == 0
    assert f"warning: ignoring stale cache file {path}" in err
    assert json.loads(path.read_text())["schema"] == "ogq-table/1"


def test_table_max_d_gets_its_own_file(tmp_path, capsys):
    code, _, _ = run(
        ["table", "--n", "3", "--max-d", "1", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 0
    doc = json.loads((tmp_path / "table-n3-maxd1.json").read_text())
    assert doc["max_d"] == 1
    assert all(e["d"] <= 1 for e in doc["entries"])


def test_table_honors_env_cache_dir(tmp_path, monkeypatch, capsys):
    env_dir = tmp_path / "from_env"
    monkeypatch.setenv("OGQ_CACHE_DIR", str(env_dir))
    code, _, _ = run(["table", "--n", "2"], capsys)
    assert code == 0
    assert (env_dir / "table-n2.json").exists()
    # an explicit flag beats the environment
    flag_dir = tmp_path / "flagged"
    code, _, _ = run(["table", "--n", "2", "--cache-dir", str(flag_dir)], capsys)
    assert code == 0
    assert (flag_dir / "table-n2.json").exists()


def test_table_io_failure_exits_4(tmp_path, capsys):
    blocker = tmp_path / "not-a-dir"
    blocker.write_text("occupied")
    code, _, err = run(["table", "--n", "2", "--cache-dir", str(blocker)], capsys)
    assert code == 4
    assert json.loads(err)["error"] == "io_error"


def test_qmul_text(capsys):
    code, out, _ = run(["qmul", "--n", "3", "--a", "1", "--b", "2"], capsys)
    assert code == 0
    assert out == "t[2,1]\n"
    code, out, _ = run(["qmul", "--n", "3", "--a", "2", "--b", "2"], capsys)
    assert code == 0
    assert out == "q*t[]\n"


def test_qmul_json(capsys):
    code, out, _ = run(
        ["qmul", "--n", "3", "--a", "2", "--b", "2", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [{"nu": "", "d": 1, "c": "1"}]


def test_ntilde_text(capsys):
    code, out, _ = run(
        ["ntilde", "--g", "3", "--n", "2", "--ell", "0", "--e", "-2"], capsys
    )
    assert code == 0
    assert out == "8\n"


def test_ntilde_weight_mismatch_prints_zero(capsys):
    code, out, _ = run(
        ["ntilde", "--g", "3", "--n", "2", "--ell", "0", "--e", "-2", "--Q", "a1"],
        capsys,
    )
    assert code == 0
    assert out == "0\n"


def test_ntilde_float_mode(capsys):
    code, out, _ = run(
        ["ntilde", "--g", "3", "--n", "2", "--ell", "0", "--e", "-2",
         "--mode", "float", "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "8"
    assert doc["float_agrees"] is True


def test_ntilde_not_covered_exits_3(capsys):
    code, _, err = run(
        ["ntilde", "--g", "3", "--n", "2", "--ell", "0", "--e", "-1"], capsys
    )
    assert code == 3
    assert json.loads(err)["error"] == "not_applicable"


def test_verify_suite_passes(capsys):
    code, out, _ = run(["verify", "--suite", "counts"], capsys)
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--suite", "counts", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "counts"
    assert doc["failures"] == 0
    assert all(c["ok"] for c in doc["checks"])


def test_verify_failure_exits_1(monkeypatch, capsys):
    def broken(name, slow=False):
        return [verify.CheckResult("demo", "forced failure", False, "boom")]

    monkeypatch.setattr(verify, "run_suite", broken)
    code, out, _ = run(["verify", "--suite", "counts"], capsys)
    assert code == 1
    assert "FAIL" in out and "boom" in out
