import json
import subprocess
import sys

import pytest

from unknotting.fixtures import all_fixtures


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "unknotting.cli", *argv],
        capture_output=True,
        text=True,
    )


@pytest.fixture
def problem_file(tmp_path):
    def make(name, split=None):
        kp = all_fixtures()[name].problem
        data = kp.to_json()
        if split is not None:
            data["split"] = {"p": split[0], "n": split[1]}
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(data))
        return str(path)

    return make


def test_mq_example(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(all_fixtures()["9_13"].problem.goeritz.to_json()))
    r = run_cli("--jobs", "1", "mq", str(path))
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["min_nonspin"] == "-27/37"


def test_mq_identity():
    import tempfile, os

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump([[1]], f)
        path = f.name
    try:
        r = run_cli("mq", path)
        assert r.returncode == 0
        assert json.loads(r.stdout)["spin"] == "0"
    finally:
        os.unlink(path)


def test_mq_parse_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("not json")
    assert run_cli("mq", str(path)).returncode == 2
    path.write_text(json.dumps([[1, 2], [3, 4]]))
    assert run_cli("mq", str(path)).returncode == 2  # not symmetric


def test_mq_indefinite(tmp_path):
    path = tmp_path / "indef.json"
    path.write_text(json.dumps([[1, 2], [2, 1]]))
    assert run_cli("mq", str(path)).returncode == 3


def test_enumerate_examples():
    r = run_cli("enumerate", "--rank", "2", "--det", "33", "--neg", "2")
    assert json.loads(r.stdout)["triples"] == [[2, 0, 6], [4, 2, 4]]
    r = run_cli(
        "enumerate", "--rank", "2", "--det", "27", "--neg", "1", "--group", "3,9"
    )
    assert json.loads(r.stdout)["triples"] == [[2, 0, 5]]
    r = run_cli("enumerate", "--rank", "2", "--det", "105", "--neg", "2")
    assert json.loads(r.stdout)["triples"] == [
        [2, 0, 18],
        [4, 0, 8],
        [6, 2, 6],
        [10, 8, 10],
    ]


def test_enumerate_even_det_rejected():
    assert run_cli("enumerate", "--rank", "2", "--det", "10", "--neg", "0").returncode == 2


def test_obstruct_exit_codes(problem_file):
    assert run_cli("--jobs", "1", "obstruct", problem_file("9_10")).returncode == 10
    assert run_cli("--jobs", "1", "obstruct", problem_file("9_35", split=(0, 2))).returncode == 12


def test_obstruct_invalid_problem(tmp_path):
    path = tmp_path / "p.json"
    data = all_fixtures()["9_10"].problem.to_json()
    data["determinant"] = 5  # contradicts the Goeritz matrix
    path.write_text(json.dumps(data))
    r = run_cli("obstruct", str(path))
    assert r.returncode == 2
    assert "goeritz-determinant" in r.stderr


def test_goeritz_two_bridge():
    r = run_cli("goeritz", "two-bridge", "3", "1")
    assert json.loads(r.stdout) == {"goeritz": [[3]], "det": 3}
    assert run_cli("goeritz", "two-bridge", "4", "2").returncode == 2


def test_goeritz_white_graph(tmp_path):
    g = all_fixtures()["9_35"].expected["white_graph"]
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_json()))
    r = run_cli("goeritz", "white-graph", str(path))
    assert json.loads(r.stdout)["goeritz"] == [[6, -3], [-3, 6]]


def test_reproduce_unknown_name():
    assert run_cli("reproduce", "nosuch").returncode == 2


def test_reproduce_single():
    r = run_cli("--jobs", "1", "reproduce", "9_13")
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True


def test_reproduce_human_mode():
    r = run_cli("--jobs", "1", "--human", "reproduce", "9_13")
    assert r.returncode == 0
    assert "RESULT: PASS" in r.stdout


def test_machine_output_is_deterministic():
    a = run_cli("--jobs", "1", "enumerate", "--rank", "3", "--det", "51", "--neg", "3")
    b = run_cli("--jobs", "1", "enumerate", "--rank", "3", "--det", "51", "--neg", "3")
    assert a.stdout == b.stdout
    c = run_cli("--jobs", "2", "reproduce", "9_10")
    d = run_cli("--jobs", "2", "reproduce", "9_10")
    assert c.stdout == d.stdout and c.returncode == d.returncode == 0
