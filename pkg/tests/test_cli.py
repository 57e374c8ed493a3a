import json
import subprocess
import sys

import pytest

from hchromatic.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, [line.split("\t") for line in out.splitlines()]


def fields(row):
    return dict(kv.split("=", 1) for kv in row[1:])


def terms(rows):
    return {fields(r)["partition"]: fields(r)["coeff"] for r in rows if r[0] == "TERM"}


class TestCompute:
    def test_self_p3(self, capsys, data_dir):
        code, rows = run(capsys, "compute", "--g", data_dir / "p3.el", "--h", data_dir / "p3.el")
        assert code == 0 and rows[0][0] == "OK"
        assert terms(rows) == {"2,1": "4", "1,1,1": "12"}

    def test_omega_p(self, capsys, data_dir):
        code, rows = run(capsys, "compute", "--g", data_dir / "p4.el", "--h-named", "cycle:7",
                         "--basis", "p", "--omega")
        assert code == 0
        assert terms(rows) == {"4": "840", "3,1": "-672", "2,2": "1260", "2,1,1": "-168", "1,1,1,1": "84"}

    def test_uncolorable_is_zero_record(self, capsys, data_dir):
        code, rows = run(capsys, "compute", "--g", data_dir / "k3.el", "--h-named", "kmn:2,2")
        assert code == 0 and fields(rows[0])["zero"] == "true" and len(rows) == 1

    def test_json_and_out(self, capsys, data_dir, tmp_path):
        out = tmp_path / "f.json"
        code, rows = run(capsys, "compute", "--g", data_dir / "p3.el", "--h", data_dir / "p3.el",
                         "--basis", "maug", "--json", "--out", out)
        assert code == 0
        rec = json.loads("\t".join(rows[1]))
        assert rec == json.loads(out.read_text())
        assert rec["basis"] == "m_aug(3)"
        assert {tuple(t["partition"]): t["num"] for t in rec["terms"]} == {(2, 1): "4", (1, 1, 1): "2"}

    @pytest.mark.parametrize("g,h", [
        ("kmn:2,3", "kmn:2,2"), ("path:5", "star:4"), ("cycle:6", "augstar:3"),
        ("edgeless:3", "complete:2"), ("star:5", "path:4"), ("multipartite:2,1", "complete:3"),
        ("cycle:4", "edgeless:3"),
    ])
    def test_closedform_matches_census(self, capsys, g, h):
        code, rows = run(capsys, "compute", "--g-named", g, "--h-named", h, "--method", "closedform", "--verify")
        assert code == 0 and fields(rows[0])["verified"] == "yes"
        assert fields(rows[0])["method"] != "census"
        _, ref = run(capsys, "compute", "--g-named", g, "--h-named", h, "--method", "census")
        assert terms(rows) == terms(ref)

    def test_no_closed_form(self, capsys):
        code, rows = run(capsys, "compute", "--g-named", "cycle:5", "--h-named", "cycle:5", "--method", "closedform")
        assert code == 3 and rows[0][0] == "ERROR"

    def test_naive_refusal(self, capsys):
        code, rows = run(capsys, "compute", "--g-named", "path:2", "--h-named", "complete:9", "--method", "naive")
        assert code == 3

    def test_bad_inputs(self, capsys, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("3\n1 7\n")
        assert run(capsys, "compute", "--g", bad, "--h-named", "star:3")[0] == 2
        assert run(capsys, "compute", "--g", tmp_path / "missing.el", "--h-named", "star:3")[0] == 2
        assert run(capsys, "compute", "--g-named", "wheel:5", "--h-named", "star:3")[0] == 2
        assert run(capsys, "compute", "--g-named", "kmn:2", "--h-named", "star:3")[0] == 2
        assert run(capsys, "compute", "--h-named", "star:3")[0] == 2

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--basis", "q"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nonsense"])
        assert exc.value.code == 2


class TestEquiv:
    def test_kmn(self, capsys, data_dir):
        code, rows = run(capsys, "equiv", "--mode", "kmn", data_dir / "c6.g6", data_dir / "p6.g6")
        assert code == 0 and rows[0][0] == "EQUIVALENT"

    def test_augstar(self, capsys, data_dir):
        code, rows = run(capsys, "equiv", "--mode", "augstar:2", data_dir / "c5.el", data_dir / "c5_twin.el")
        f = fields(rows[0])
        assert rows[0][0] == "DISTINCT" and f["delta"] == "2:+1,3:-1"
        assert f["census1"] == "1^5,2^5" and f["census2"] == "1^5,2^4,3^1"
        _, rows = run(capsys, "equiv", "--mode", "augstar:1", data_dir / "c5.el", data_dir / "c5_twin.el")
        assert rows[0][0] == "EQUIVALENT"

    def test_exact(self, capsys, data_dir):
        code, rows = run(capsys, "equiv", "--mode", f"exact:{data_dir / 'p3.el'}", data_dir / "k1k2.el", data_dir / "p3.el")
        assert rows[0][0] == "DISTINCT"
        assert fields(rows[0]) == {"mode": "exact", "partition": "1,1,1", "count1": "4", "count2": "2"}
        _, rows = run(capsys, "equiv", "--mode", "exact:star:2", data_dir / "p3.el", data_dir / "p3.el")
        assert rows[0][0] == "EQUIVALENT"

    def test_stardeg(self, capsys, data_dir):
        _, rows = run(capsys, "equiv", "--mode", "stardeg:4", data_dir / "p4.el", data_dir / "p4.el")
        assert rows[0][0] == "EQUIVALENT"

    def test_bad_mode(self, capsys, data_dir):
        assert run(capsys, "equiv", "--mode", "bogus", data_dir / "p3.el", data_dir / "p3.el")[0] == 2
        assert run(capsys, "equiv", "--mode", "augstar:x", data_dir / "p3.el", data_dir / "p3.el")[0] == 2
        assert run(capsys, "equiv", "--mode", "augstar:2", data_dir / "p3.el", data_dir / "p4.el")[0] == 3


class TestDistinguish:
    def test_pairwise(self, capsys, data_dir):
        code, rows = run(capsys, "distinguish", "--mode", "pairwise", data_dir / "k1k2.el", data_dir / "p3.el", "--check")
        assert code == 0 and rows[0][0] == "H" and fields(rows[0])["m"] == "1"
        assert rows[-1][0] == "PASS"

    def test_pairwise_isomorphic(self, capsys, data_dir):
        assert run(capsys, "distinguish", "--mode", "pairwise", data_dir / "p3.el", data_dir / "p3.el")[0] == 3

    def test_uniform(self, capsys, data_dir):
        code, rows = run(capsys, "distinguish", "--mode", "uniform", data_dir / "p3.el", data_dir / "k3.el", "--check")
        assert code == 0
        assert fields(rows[1])["multiplicity"] == str(2 * int(fields(rows[0])["N"]))
        assert rows[-1][0] == "PASS"

    def test_general(self, capsys, data_dir):
        code, rows = run(capsys, "distinguish", "--mode", "general", data_dir / "k1k2.el", data_dir / "p3.el", "--check")
        assert code == 0
        mults = [int(fields(r)["multiplicity"]) for r in rows if r[0] == "PART"]
        assert mults[0] == 1203 and mults[2] > 10 ** 27
        counts = [fields(r)["a1k"] for r in rows if r[0] == "COUNT"]
        assert counts == ["18192006468115966296354869639382237808", "2406"]
        assert rows[-1][0] == "PASS"


class TestCensusTrees:
    def test_six(self, capsys):
        code, rows = run(capsys, "census-trees", "--max-n", 6)
        assert code == 0
        assert [int(fields(r)["count"]) for r in rows if r[0] == "TREES"] == [1, 1, 1, 2, 3, 6]
        assert rows[-1][0] == "NO_COLLISION" and fields(rows[-1])["trees"] == "14"

    def test_one(self, capsys):
        code, rows = run(capsys, "census-trees", "--max-n", 1)
        assert code == 0 and rows[-1] == ["NO_COLLISION", "max_n=1", "trees=1"]

    def test_bad(self, capsys):
        assert run(capsys, "census-trees", "--max-n", 0)[0] == 3


class TestVerify:
    def test_lemma31(self, capsys):
        code, rows = run(capsys, "verify", "--suite", "lemma31")
        assert code == 0 and rows[0][0] == "PASS" and int(fields(rows[0])["checked"]) > 200

    def test_ranks_notes(self, capsys):
        code, rows = run(capsys, "verify", "--suite", "ranks")
        notes = [fields(r)["text"] for r in rows if r[0] == "NOTE"]
        assert code == 0 and "partial-star rank k=4 n=2: 4" in notes
        assert "star family rank k=4: 5 (bound 5)" in notes

    def test_budget_partial(self, capsys):
        code, rows = run(capsys, "verify", "--suite", "prop35", "--budget", 0)
        assert code == 0 and rows[0][0] == "PARTIAL"


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["compute", "--g-named", "cycle:6", "--h-named", "kmn:2,3", "--basis", "s"],
        ["census-trees", "--max-n", "7"],
        ["distinguish", "--mode", "general", "tests/data/k1k2.el", "tests/data/p3.el"],
    ])
    def test_byte_identical(self, argv):
        cmd = [sys.executable, "-m", "hchromatic.cli", *argv]
        a = subprocess.run(cmd, capture_output=True, check=True)
        b = subprocess.run(cmd, capture_output=True, check=True)
        assert a.stdout == b.stdout and a.stdout

    def test_jobs_do_not_change_output(self, capsys):
        _, one = run(capsys, "compute", "--g-named", "cycle:6", "--h-named", "kmn:2,3", "--method", "census")
        _, two = run(capsys, "compute", "--g-named", "cycle:6", "--h-named", "kmn:2,3", "--method", "census", "--jobs", 2)
        assert one == two
