import csv
import io
import json
import re

import pytest

from cosetkit.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_classify_n3():
    code, text = run("classify", "--n", "3")
    assert code == 0
    data = json.loads(text)
    assert data["count"] == data["expected"] == len(data["modules"]) == 20
    keys = [(r["delta_prime"], r["k"]) for r in data["modules"]]
    assert keys == sorted(keys)


def test_classify_oracle_column():
    code, text = run("classify", "--n", "4", "--oracle")
    assert code == 0
    rows = json.loads(text)["modules"]
    assert all(r["lowest_weight"] == r["oracle_weight"] for r in rows)


def test_classify_csv():
    code, text = run("classify", "--n", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 9
    assert rows[0][:2] == ["delta_prime", "k"]
    assert rows[0][-3:] == ["0-1", "0-2", "1-2"]
    assert all(re.fullmatch(r"\d+-\d+:(0|1/2|1/16|S\(\d+(,\d+)?\))", cell) for row in rows[1:] for cell in row[6:])


def test_tn_blocks():
    code, text = run("tn", "--N", "4")
    assert code == 0
    report = json.loads(text)
    assert [b["dim"] for b in report["blocks"]] == [1, 3, 2]
    assert [b["partition"] for b in report["blocks"]] == [[4], [3, 1], [2, 2]]
    assert report["total_dim"] == report["evaluation_rank"] == 14


def test_tn_membership_check():
    code, text = run("tn", "--N", "4", "--check-lemma42")
    assert code == 0 and json.loads(text)["ok"]


def test_griess_check():
    code, text = run("griess", "--n", "2", "--check")
    assert code == 0
    report = json.loads(text)
    assert report["central_charge"] == "6/5"
    assert report["disjoint_constants"] == {"product_same": "0", "product_cross": "0", "form": "0"}


def test_fusion_commands():
    code, text = run("fusion", "--m", "1")
    assert code == 0 and json.loads(text)["ok"]
    code, text = run("fusion", "--m", "1", "--triple", "2,2", "2,2", "1,1")
    assert code == 0
    assert json.loads(text)["admissible"] is True


def test_verify_characters():
    code, text = run("verify-characters", "--copies", "2", "--delta", "10", "--order", "8")
    assert code == 0
    assert json.loads(text)["ok"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--n", "13"],
        ["classify", "--n", "9", "--oracle"],
        ["tn", "--N", "8"],
        ["tn", "--N", "6", "--check-lemma42"],
        ["verify-characters", "--copies", "2", "--delta", "1", "--order", "4"],
        ["verify-characters", "--copies", "2", "--order", "41"],
        ["fusion", "--m", "1", "--triple", "5,1", "1,1", "1,1"],
        ["fusion", "--m", "1", "--triple", "x", "1,1", "1,1"],
    ],
)
def test_guards_exit_two(argv):
    assert run(*argv)[0] == 2


def test_max_order_env(monkeypatch):
    monkeypatch.setenv("COSETKIT_MAX_ORDER", "5")
    assert run("verify-characters", "--copies", "2", "--order", "6")[0] == 2
    assert run("verify-characters", "--copies", "2", "--order", "5")[0] == 0


def test_argparse_usage_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["classify"], io.StringIO())
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [("classify", "--n", "5", "--oracle"), ("griess", "--n", "3", "--check"), ("tn", "--N", "5")])
def test_deterministic_and_float_free(argv):
    first, second = run(*argv), run(*argv)
    assert first == second
    assert not re.search(r"\d\.\d|e[+-]\d", first[1])


def test_verify_all():
    code, text = run("verify-all")
    assert code == 0
    report = json.loads(text)
    assert [s["suite"] for s in report["suites"]] == ["fusion", "tn", "griess", "classify", "verify-characters"]
    assert report["ok"]
