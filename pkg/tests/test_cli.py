import json
import subprocess
import sys

import pytest

from genbooks import complete_multipartite, serialize_graph6
from genbooks.cli import main
from genbooks.records import SCHEMA, dumps, loads, render_human


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [loads(line) for line in out.splitlines()]


class TestSubcommands:
    def test_ramsey(self, capsys):
        code, out, _ = run(capsys, "ramsey", "--p", "2", "--q", "2", "--r", "2", "--format", "records")
        assert code == 0
        head, *log = records(out)
        assert (head["kind"], head["value"], head["formula"], head["witness"]) == ("ramsey", 7, 7, "EFz_")
        assert head["witness"] == serialize_graph6(complete_multipartite([3, 3]))
        assert [r["arrows"] for r in log] == [False] * 6 + [True]

    def test_books(self, capsys):
        code, out, _ = run(capsys, "books", "--graph", "Bw", "--r", "2", "--format", "records")
        (r,) = records(out)
        assert code == 0 and r["bs"] == 1 and r["base"] == [0, 1] and r["pages"] == [2]

    def test_books_human_is_one_based(self, capsys):
        code, out, _ = run(capsys, "books", "--graph", "Bw", "--r", "2")
        assert code == 0 and "[books]" in out and "[1, 2]" in out

    def test_books_from_file(self, capsys, tmp_path):
        f = tmp_path / "graphs.g6"
        f.write_text("Bw\n# comment\nEFz_\nD~{\n")
        code, out, _ = run(capsys, "books", "--graph", str(f), "--r", "2", "--q", "3", "--format", "records")
        rs = records(out)
        assert code == 0 and [r["bs"] for r in rs] == [1, 0, 3] and [r["contains_book"] for r in rs] == [False, False, True]

    def test_constants(self, capsys):
        code, out, _ = run(capsys, "constants", "--p", "2", "--format", "records")
        (r,) = records(out)
        assert r["upper_is_20_cubed_inverse"] and r["sandwich_holds"] and r["cube_root_inequality_holds"]
        assert r["residual"] < 1e-12

    def test_constants_default_range(self, capsys):
        _, out, _ = run(capsys, "constants", "--format", "records")
        assert [r["p"] for r in records(out)] == list(range(2, 11))

    def test_stability(self, capsys):
        g = serialize_graph6(complete_multipartite([6, 6]))
        code, out, _ = run(capsys, "stability", "--graph", g, "--p", "2", "--alpha", "0.001", "--format", "records")
        (r,) = records(out)
        assert code == 0 and r["p_chromatic"] is True and r["deleted"] == []

    def test_witness_pass_and_fail(self, capsys):
        code, out, _ = run(capsys, "witness", "--p", "2", "--q", "3", "--r", "2", "--format", "records")
        (r,) = records(out)
        assert code == 0 and r["verified"] and r["complement_bs"] == 2
        code, out, _ = run(capsys, "witness", "--p", "2", "--q", "2", "--r", "2", "--graph", "Bw")
        assert code == 1

    def test_regularity_pair(self, capsys):
        g = serialize_graph6(complete_multipartite([4, 4]))
        code, _, _ = run(capsys, "regularity", "--graph", g, "--a", "0,1,2,3", "--b", "4,5,6,7", "--eps", "0.3")
        assert code == 0

    def test_regularity_half_split_fails(self, capsys):
        from test_regularity import half_split

        g, a, b = half_split(4)
        args = ["--graph", serialize_graph6(g), "--a", ",".join(map(str, a)), "--b", ",".join(map(str, b))]
        code, out, _ = run(capsys, "regularity", *args, "--eps", "0.3", "--format", "records")
        (r,) = records(out)
        assert code == 1 and r["witness_x"] == [0, 1, 2, 3] and r["witness_density"] == "1"
        code, out, _ = run(capsys, "regularity", *args, "--eps", "0.3", "--mode", "randomized", "--format", "records")
        (r,) = records(out)
        assert code == 1 and isinstance(r["seed"], int)

    def test_regularity_partition(self, capsys, tmp_path):
        f = tmp_path / "part.txt"
        f.write_text("exceptional:\npart: 0 1 2\npart: 3 4 5\npart: 6 7 8\n")
        g = serialize_graph6(complete_multipartite([3, 3, 3]))
        code, out, _ = run(
            capsys, "regularity", "--graph", g, "--partition", str(f),
            "--p", "2", "--r", "2", "--xi", "0.5", "--c-pr", "0.1667", "--format", "records",
        )
        (r,) = records(out)
        assert code == 0 and r["cluster_edges"] == {"hi": 3, "irr": 0, "lo": 0, "mid": 0}

    def test_lower_bound(self, capsys):
        code, out, _ = run(
            capsys, "lower-bound", "--m", "20", "--k", "1", "--r", "2", "--trials", "4", "--seed", "3", "--format", "records"
        )
        kinds = [r["kind"] for r in records(out)]
        assert code == 0 and kinds == ["lb-params", "lb-bounds", "lb-trials"]
        assert records(out)[0]["c_times_C_pow_r"] == "1/3"

    def test_generated_seed_is_reported(self, capsys):
        _, out, _ = run(capsys, "lower-bound", "--m", "20", "--k", "1", "--r", "2", "--trials", "1", "--format", "records")
        assert isinstance(records(out)[-1]["seed"], int)


class TestErrors:
    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "books", "--graph", "Bw", "--r", "2", "--bogus")
        assert code == 2 and "unrecognized" in err

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "nope")[0] == 2

    def test_bad_graph6(self, capsys):
        code, _, err = run(capsys, "books", "--graph", "B!", "--r", "2")
        assert code == 2 and "graph6" in err

    def test_cap_violation(self, capsys):
        code, _, err = run(capsys, "ramsey", "--p", "2", "--q", "2", "--r", "3", "--n-cap", "6")
        assert code == 2 and "cap" in err

    def test_exact_regularity_cap(self, capsys):
        g = serialize_graph6(complete_multipartite([15, 15]))
        a = ",".join(map(str, range(15)))
        b = ",".join(map(str, range(15, 30)))
        assert run(capsys, "regularity", "--graph", g, "--a", a, "--b", b, "--eps", "0.3")[0] == 2

    def test_small_m(self, capsys):
        code, _, err = run(capsys, "lower-bound", "--m", "5", "--k", "1", "--r", "2")
        assert code == 2 and "m too small" in err

    def test_bad_thread_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GENBOOKS_THREADS", "zero")
        assert run(capsys, "constants", "--p", "2")[0] == 2


class TestRecords:
    def test_schema_and_sorted_keys(self, capsys):
        _, out, _ = run(capsys, "witness", "--p", "3", "--q", "1", "--r", "2", "--format", "records")
        line = out.strip()
        rec = json.loads(line)
        assert rec["schema"] == SCHEMA
        assert list(rec) == sorted(rec)
        assert dumps(loads(line)) == line

    def test_loads_rejects_other_schema(self):
        with pytest.raises(ValueError):
            loads('{"schema": "other/9", "kind": "x"}')

    def test_human_rendered_from_records(self, capsys):
        _, out, _ = run(capsys, "constants", "--p", "3", "--format", "records")
        _, human, _ = run(capsys, "constants", "--p", "3")
        assert render_human(records(out)) == human

    def test_thread_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("GENBOOKS_THREADS", "2")
        _, out, _ = run(capsys, "ramsey", "--p", "2", "--q", "1", "--r", "1", "--format", "records")
        assert records(out)[0]["threads"] == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "genbooks", "books", "--graph", "Bw", "--r", "2", "--format", "records"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and json.loads(res.stdout)["bs"] == 1
