import csv
import json
import re
import shlex
from pathlib import Path

import pytest

from tropmon.cli import run
from tropmon.factorize import eval_word
from tropmon.generators import minplus2_gens, parse_descriptor
from tropmon.matrix import mat_from_json, mat_mul
from tropmon.semiring import min_plus

README = Path(__file__).resolve().parents[1] / "README.md"


def readme_examples():
    """(argv, expected stdout lines) for every ``$ tropmon`` line in console blocks."""
    out = []
    for block in re.findall(r"```console\n(.*?)```", README.read_text(), re.S):
        cur = None
        for line in block.splitlines():
            if line.startswith("$ tropmon "):
                cur = (shlex.split(line[len("$ tropmon "):]), [])
                out.append(cur)
            elif cur is not None:
                cur[1].append(line)
    return out


def _normalise(lines):
    norm = []
    for line in lines:
        if line.startswith("seconds:"):
            continue
        if line.startswith("{"):
            doc = json.loads(line)
            doc.pop("seconds", None)
            norm.append(doc)
        else:
            norm.append(line)
    return norm


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 8


@pytest.mark.parametrize("argv,expected", EXAMPLES, ids=[" ".join(a) for a, _ in EXAMPLES])
def test_readme_example(argv, expected, capsys):
    code = run(argv)
    got = capsys.readouterr().out.splitlines()
    assert _normalise(got) == _normalise(expected)
    assert code == (1 if "REDUNDANT" in expected else 0)


def run_json(argv, capsys):
    code = run(argv + ["--json"])
    doc = json.loads(capsys.readouterr().out)
    if isinstance(doc, dict):
        doc.pop("seconds", None)
    return code, doc


def test_json_stable_across_runs(capsys):
    for argv in (["enumerate", "--semiring", "min-plus", "--t", "2"],
                 ["verify-irredundant", "--semiring", "max-plus", "--t", "2"],
                 ["factorize", "--semiring", "max-plus", "--infinite", "7 -inf; 3 12"]):
        assert run_json(argv, capsys) == run_json(argv, capsys)


@pytest.mark.parametrize("argv", [
    ["factorize", "--semiring", "min-plus", "--t", "2", "1 2; 3"],
    ["factorize", "--semiring", "min-plus", "--t", "2", "1 2; 3 -inf"],
    ["factorize", "--semiring", "min-plus", "--t", "2", "1 2; 3 9"],
    ["enumerate", "--semiring", "min-plus"],
    ["enumerate", "--semiring", "min-plus", "--infinite"],
    ["verify-full", "--semiring", "max-plus", "--n", "3", "--t", "1"],
    ["check-conjecture", "--t", "-1"],
    ["gens", "--semiring", "tropical", "--t", "1"],
    ["gens", "--t", "1", "--gens-file", "/nonexistent/gens.json"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_limit_exceeded_exit_1(capsys):
    assert run(["verify-full", "--semiring", "min-plus", "--t", "2", "--limit", "10"]) == 1
    assert "limit" in capsys.readouterr().err


def test_gens_file_round_trip(tmp_path, capsys):
    assert run(["gens", "--semiring", "max-plus", "--t", "2", "--json"]) == 0
    path = tmp_path / "gens.json"
    path.write_text(capsys.readouterr().out)
    base = ["--semiring", "max-plus", "--t", "2"]
    _, direct = run_json(["verify-irredundant"] + base, capsys)
    _, via_file = run_json(["verify-irredundant"] + base + ["--gens-file", str(path)], capsys)
    assert direct == via_file and direct["irredundant"]

    plain = tmp_path / "plain.json"
    plain.write_text(json.dumps([e["matrix"] for e in json.loads(path.read_text())][:3]))
    code, doc = run_json(["verify-full"] + base + ["--gens-file", str(plain)], capsys)
    assert code == 1 and not doc["full"] and doc["generator_count"] == 3


def test_gens_file_3x3(tmp_path, capsys):
    # the greedy result for 3x3 max-plus at t = 0 fed back through --gens-file
    assert run(["min-gens", "--semiring", "max-plus", "--n", "3", "--t", "0", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc["generators"]))
    base = ["--semiring", "max-plus", "--n", "3", "--t", "0", "--gens-file", str(path)]
    code, rep = run_json(["verify-full"] + base, capsys)
    assert code == 0 and rep["generated_size"] == 2 ** 9
    assert run_json(["verify-irredundant"] + base, capsys)[0] == 0


def test_enumerate_outputs(tmp_path, capsys):
    el, cay = tmp_path / "e.jsonl", tmp_path / "c.csv"
    argv = ["enumerate", "--semiring", "min-plus", "--t", "1",
            "--elements-out", str(el), "--cayley-out", str(cay)]
    assert run(argv) == 0
    capsys.readouterr()
    rows = [json.loads(line) for line in el.read_text().splitlines()]
    assert len(rows) == 81 and rows[0]["word"] == [] and rows[0]["matrix"] == [[0, "inf"], ["inf", 0]]
    with cay.open() as fh:
        table = list(csv.reader(fh))
    assert table[0] == ["element_index", "generator_index", "target_index"]
    assert len(table) == 1 + 81 * 5
    spec = min_plus(1)
    gens = minplus2_gens(1).matrices
    mats = [mat_from_json(spec, r["matrix"]) for r in rows]
    for e, g, target in table[1:]:
        assert mats[int(target)] == mat_mul(mats[int(e)], gens[int(g)])
    for r, m in zip(rows, mats):
        assert eval_word(spec, 2, [parse_descriptor(tok) for tok in r["word"]]) == m


def test_factorize_mismatched_dimension(capsys):
    assert run(["factorize", "--semiring", "min-plus", "--t", "1", "0 0 0; 0 0 0; 0 0 0"]) == 2
