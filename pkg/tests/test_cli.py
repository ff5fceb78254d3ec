import json
import subprocess
import sys

import pytest

from splitkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify


def test_classify_inline_graph6(capsys):
    code, out, err = run_cli(capsys, "classify", "--inline", "Bw")
    assert code == 0 and err == ""
    assert out.startswith("Bw: split=yes balanced=no pseudo_split=yes ng=yes")
    assert "omega=3" in out and "chi=3" in out
    assert "witnesses=[unbalanced=(0,1)]" in out


def test_classify_inline_multiple_lines(capsys):
    code, out, _ = run_cli(capsys, "classify", "--inline", "Bw\nA_")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("Bw:") and lines[1].startswith("A_:")


def test_classify_inline_edge_list(capsys):
    code, out, _ = run_cli(capsys, "classify", "--inline", "4 4\n0 1\n0 2\n1 2\n0 3")
    assert code == 0
    assert out.startswith("edge-list: split=yes balanced=no")


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--format", "json", "--inline", "Bw")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["input"] == "Bw"
    assert payload[0]["is_split"] is True
    assert payload[0]["ks"] == {"k": [0, 1, 2], "s": []}
    assert payload[0]["witnesses"] == [{"label": "unbalanced", "edge": [0, 1]}]


def test_classify_from_file(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("A_\n")
    code, out, _ = run_cli(capsys, "classify", "--file", str(path))
    assert code == 0 and out.startswith("A_:")


def test_classify_missing_file(capsys):
    code, _, err = run_cli(capsys, "classify", "--file", "/no/such/file")
    assert code == 1 and err.startswith("error:")


@pytest.mark.parametrize("text", ["!!", "A", "3 9\n0 1"])
def test_classify_bad_input(capsys, text):
    code, _, err = run_cli(capsys, "classify", "--inline", text)
    assert code == 1 and err.startswith("error:")


def test_classify_reports_corpus_line(capsys):
    code, _, err = run_cli(capsys, "classify", "--inline", "Bw\nA")
    assert code == 1 and "line 2" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_single_theorem_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "THM_NG", "--max-n", "5")
    assert code == 0
    assert "THM_NG" in out and "PASS" in out


def test_verify_single_theorem_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "PROP4", "--max-n", "8", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["theorem"] == "PROP4"
    assert payload["graphs_checked"] == 5
    assert payload["verdict"] == "PASS"


def test_verify_all_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "all", "--max-n", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [r["theorem"] for r in payload] == [
        "PROP1", "PROP2", "PROP3", "PROP4", "PROP5", "LEMMA1", "LEMMA2",
        "THM_SPLIT_FORBIDDEN", "THM_2K2_CLAW", "THM_CONTRACTION",
        "THM_KS_CASES", "THM_UNBALANCED", "THM_PSEUDO", "THM_NG",
    ]
    assert all(r["verdict"] == "PASS" for r in payload)


def test_verify_max_n_over_cap(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "PROP1", "--max-n", "9")
    assert code == 2 and err.startswith("error:")


def test_verify_corpus_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "corpus.g6"
    path.write_text("A?\n")  # two isolated vertices
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "THM_UNBALANCED", "--file", str(path)
    )
    assert code == 1
    assert "FAIL" in out
    assert "counterexample A?: unbalanced=True but witness=None" in out


def test_verify_corpus_order_too_large(tmp_path, capsys):
    path = tmp_path / "corpus.g6"
    path.write_text("J??????????\n")  # edgeless graph of order 11
    code, _, err = run_cli(
        capsys, "verify", "--theorem", "THM_NG", "--file", str(path)
    )
    assert code == 1 and err.startswith("error:")


def test_verify_corpus_malformed(tmp_path, capsys):
    path = tmp_path / "corpus.g6"
    path.write_text("Bw\nnot-graph6\n")
    code, _, err = run_cli(
        capsys, "verify", "--theorem", "THM_NG", "--file", str(path)
    )
    assert code == 1 and "line 2" in err


def test_verify_jobs_flag_changes_nothing(capsys):
    code1, out1, _ = run_cli(
        capsys, "verify", "--theorem", "LEMMA2", "--max-n", "7",
        "--jobs", "1", "--format", "json",
    )
    code2, out2, _ = run_cli(
        capsys, "verify", "--theorem", "LEMMA2", "--max-n", "7",
        "--jobs", "2", "--format", "json",
    )
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


# ---------------------------------------------------------------------------
# census


def test_census_text(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-n", "4")
    assert code == 0
    assert "H1(l=2):1" in out


def test_census_json(capsys):
    code, out, _ = run_cli(capsys, "census", "--max-n", "4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[3]["connected"] == 6
    assert rows[3]["exceptional"] == {"H1(l=2)": 1}


def test_census_max_n_over_cap(capsys):
    code, _, err = run_cli(capsys, "census", "--max-n", "9")
    assert code == 2 and err.startswith("error:")


# ---------------------------------------------------------------------------
# argument errors and the installed entry point


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify"],  # --theorem is required
        ["verify", "--theorem", "NOPE"],
        ["classify"],  # needs --inline or --file
        ["classify", "--inline", "Bw", "--file", "x"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "splitkit.cli", "classify", "--inline", "A_"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("A_:")
