import io
import json

from dioapprox import cli


def run_capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_farey_list_plain():
    code, out, _ = run_capture(["farey", "list", "5"])
    assert code == 0
    assert "0/1 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1" in out
    assert "count: 11" in out


def test_dirichlet_json_payload():
    code, out, _ = run_capture(["approx", "dirichlet", "sqrt(2)", "5", "--format", "json"])
    assert code == 0
    env = json.loads(out)
    assert env["result"] == {"p": "7", "q": "5", "bound": "1/25", "verified": True}
    assert env["inputs"]["alpha"] == "(0+1*sqrt(2))/1"


def test_partition_pass_and_fail_exit_codes():
    code, out, _ = run_capture(
        ["beatty", "partition", "(1+1*sqrt(5))/2", "(3+1*sqrt(5))/2", "10000"]
    )
    assert code == 0 and "PASS" in out
    code, out, _ = run_capture(["beatty", "partition", "3/2", "3", "100"])
    assert code == 1 and "FAIL" in out


def test_parse_error_exit_code():
    code, _, err = run_capture(["beatty", "term", "sqrt(", "5"])
    assert code == 2 and "error" in err


def test_resource_exit_code():
    code, out, _ = run_capture(
        ["beatty", "common", "(1+1*sqrt(5))/2", "(3+1*sqrt(5))/2", "0", "1",
         "--limit", "500", "--format", "json"]
    )
    assert code == 3
    env = json.loads(out)
    assert env["result"]["exhausted"] is True
    assert env["resource"]["exhausted"] is True


def test_verify_subcommand():
    code, out, _ = run_capture(
        ["approx", "verify", "sqrt(2)", "7", "5", "--kind", "dirichlet",
         "--bound-q", "5", "--format", "json"]
    )
    assert code == 0 and json.loads(out)["result"]["verified"] is True
    code, out, _ = run_capture(
        ["approx", "verify", "sqrt(2)", "3", "2", "--kind", "square", "--bound-q", "2"]
    )
    assert code == 1


def test_nonarch_commands():
    code, out, _ = run_capture(["nonarch", "floor", "(t^2)/(t+1)"])
    assert code == 0 and "t - 1" in out
    code, out, _ = run_capture(["nonarch", "arith", "t", "mul", "1/t"])
    assert code == 0 and "value: 1" in out
    code, out, _ = run_capture(["nonarch", "linf", "5/4", "3/2", "--format", "json"])
    env = json.loads(out)
    assert env["result"]["m"] == "4" and env["result"]["separator"] == "2"
    code, out, _ = run_capture(["nonarch", "beatty", "(t+1)/(t)", "t"])
    assert code == 0 and "t + 1" in out


def test_oracle_commands():
    code, out, _ = run_capture(["oracle", "beatty", "(1+1*sqrt(5))/2", "12"])
    assert code == 0
    assert "0 1 3 4 6 8 9 11 12" in out


def test_json_round_trip_reproduces_payload():
    cases = [
        ["approx", "dirichlet", "sqrt(2)", "5", "--format", "json"],
        ["farey", "greatest", "5", "9", "--format", "json"],
        ["beatty", "window", "(1+1*sqrt(5))/2", "12", "--format", "json"],
        ["beatty", "claim51", "3/2", "sqrt(2)", "--format", "json"],
        ["beatty", "dmo", "sqrt(2)", "9/10", "19/20", "100", "--format", "json"],
        ["nonarch", "linf", "5/4", "3/2", "--format", "json"],
        ["oracle", "dirichlet", "sqrt(2)", "10", "--format", "json"],
    ]
    for argv in cases:
        _, first, _ = run_capture(argv)
        env = json.loads(first)
        _, second, _ = run_capture(env["argv"])
        assert second == first, argv


def test_every_numeric_in_json_is_a_string():
    def walk(node):
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)
        else:
            assert not isinstance(node, float)
            assert isinstance(node, (str, bool, int)) or node is None
            assert not isinstance(node, int) or isinstance(node, bool)

    for argv in (
        ["approx", "hurwitz", "(1+1*sqrt(5))/2", "10", "--format", "json"],
        ["beatty", "mu", "(1+1*sqrt(5))/2", "10", "--format", "json"],
        ["farey", "mediant", "1/3", "2/5", "5", "--format", "json"],
    ):
        _, out, _ = run_capture(argv)
        walk(json.loads(out))
