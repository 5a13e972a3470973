import csv
import io
import json
import subprocess
import sys

import pytest

from eulerian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "B", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"kind": "B", "n": 3, "method": "recurrence",
                               "coeffs": ["1", "23", "23", "1"]}


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "D", "--n-min", "2", "--n-max", "3",
                       "--format", "csv", "--method", "enum")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "k", "coeff"]
    assert rows[1:] == [["2", "0", "1"], ["2", "1", "2"], ["2", "2", "1"],
                        ["3", "0", "1"], ["3", "1", "11"], ["3", "2", "11"], ["3", "3", "1"]]


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "A", "--n", "3")
    assert code == 0
    assert out.strip() == "A_3(t) = 1 + 4*t + t^2"


@pytest.mark.parametrize("method", ["enum", "recurrence", "unpleasant"])
def test_methods_agree(capsys, method):
    _, out, _ = run(capsys, "compute", "--kind", "D", "--n", "5", "--method", method,
                    "--format", "json")
    assert json.loads(out)["coeffs"] == ["1", "157", "802", "802", "157", "1"]


def test_compute_out_file(capsys, tmp_path):
    path = tmp_path / "b.json"
    code, out, _ = run(capsys, "compute", "--kind", "B", "--n", "2", "--format", "json",
                       "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["coeffs"] == ["1", "6", "1"]


def test_type_d_recurrence_below_range(capsys):
    code, _, err = run(capsys, "compute", "--kind", "D", "--n", "1")
    assert code == 2
    assert "range starts at 2" in err


def test_enumeration_guard(capsys):
    code, _, err = run(capsys, "compute", "--kind", "B", "--n", "11", "--method", "enum")
    assert code == 2 and "--force" in err


def test_missing_n(capsys):
    code, _, err = run(capsys, "compute", "--kind", "B")
    assert code == 2 and err.startswith("error:")


def test_bad_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--kind", "Z", "--n", "2"])
    assert exc.value.code == 2


def test_verify_target(capsys):
    code, out, _ = run(capsys, "verify", "thmB", "--n-max", "5")
    assert code == 0
    assert out.splitlines() == [f"thmB n={n} PASS" for n in range(1, 6)]


def test_verify_below_range(capsys):
    code, _, err = run(capsys, "verify", "thmD", "--n-max", "1")
    assert code == 2 and "range starts at 2" in err


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "nope", "--n-max", "3")
    assert code == 2 and "unknown target" in err


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n-max", "4", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert all(r["pass"] for r in records)
    assert {r["target"] for r in records} >= {"thmB", "thmD", "egfB", "egfD", "lemD0"}
    assert min(r["n"] for r in records if r["target"] == "thmD") == 2


def test_interlace(capsys):
    code, out, _ = run(capsys, "interlace", "--kind", "D", "--n-max", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == [str(n) for n in range(2, 9)]
    assert all(r["pass"] == "True" for r in rows)


def test_interlace_rejects_type_a(capsys):
    code, _, _ = run(capsys, "interlace", "--kind", "A", "--n-max", "3")
    assert code == 2


def test_refined_json(capsys):
    code, out, _ = run(capsys, "refined", "--kind", "D", "--n", "4", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    polys = [r for r in records if "coeffs" in r]
    assert len(polys) == 8 and polys[0]["coeffs"] == ["2", "22", "22", "2"]
    extra = {k: v for r in records for k, v in r.items() if k not in ("kind", "n")}
    assert extra["half_sums"] is True and extra["sample_check"] is True
    cert = extra["pair_cert"]
    assert all(cert[i][j] for i in range(8) for j in range(i + 1, 8))


def test_refined_text(capsys):
    code, out, _ = run(capsys, "refined", "--kind", "B", "--n", "2")
    assert code == 0
    assert "B_{2,0}(t) = 1 + t" in out and "half sums: PASS" in out


def test_refined_range(capsys):
    code, _, _ = run(capsys, "refined", "--kind", "D", "--n", "1")
    assert code == 2


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--kind", "B", "--n", "5", "--workers-list", "1,2",
                       "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["elements"] for r in records if r["method"] == "enum"] == [3840, 3840]


def test_workers_byte_identical(capsys):
    outputs = set()
    for w in ("1", "2", "4"):
        _, out, _ = run(capsys, "compute", "--kind", "B", "--n-max", "7", "--method", "enum",
                        "--workers", w, "--format", "csv")
        outputs.add(out)
    assert len(outputs) == 1


def test_deterministic_refined(capsys):
    first = run(capsys, "refined", "--kind", "D", "--n", "3", "--seed", "5", "--format", "json")
    second = run(capsys, "refined", "--kind", "D", "--n", "3", "--seed", "5", "--format", "json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerian", "compute", "--kind", "B", "--n", "2",
                           "--format", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "6", "1"]


def test_bench_beyond_guard_times_recurrence_only(capsys):
    code, out, _ = run(capsys, "bench", "--kind", "B", "--n", "100", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["method"] for r in records] == ["recurrence"]


def test_bench_bad_workers_list(capsys):
    code, _, err = run(capsys, "bench", "--kind", "B", "--n", "3", "--workers-list", "x")
    assert code == 2 and "workers-list" in err


def test_compute_a0(capsys):
    _, out, _ = run(capsys, "compute", "--kind", "A", "--n", "0", "--format", "json")
    assert json.loads(out)["coeffs"] == ["1"]


def test_interlace_b1(capsys):
    code, out, _ = run(capsys, "interlace", "--kind", "B", "--n", "1")
    assert code == 0 and "PASS" in out
