import io
import json

import pytest

from qtypea import cli, syntax
from qtypea.invariants import recompose


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    return code, (json.loads(text) if text.strip() else None)


def test_normal_form_generic():
    code, payload = run_json(["--n", "2", "normal-form", "x[2,2] x[1,1]"])
    assert code == 0
    assert payload["normal_form"] == \
        "x[1,1] x[2,2] - (q - q^-1) x[1,2] x[2,1]"
    code, payload = run_json(["--n", "2", "normal-form", "x[1,1]"])
    assert code == 0 and payload["normal_form"] == "x[1,1]"


def test_normal_form_zeta_mode_prints_z():
    code, payload = run_json(["--n", "3", "--mode", "zeta", "--zeta-order",
                              "5", "normal-form", "xt[1,2] xt[2,3]"])
    assert code == 0
    assert payload["normal_form"] == \
        "z^-1 xt[2,3] xt[1,2] + (z - z^-1) xt[1,3]"
    assert payload["mode"] == 5


def test_normal_form_text_format():
    code, text = run(["--n", "2", "--format", "text",
                      "normal-form", "x[1,2] x[1,1]"])
    assert code == 0
    assert text.strip() == "q^-1 x[1,1] x[1,2]"


def test_normal_form_parse_error_exit_code():
    code, _ = run(["--n", "2", "normal-form", "x[1"])
    assert code == 3
    code, _ = run(["--n", "2", "normal-form", "x[1,2] + xt[1,2]"])
    assert code == 3


def test_bwb_command():
    code, payload = run_json(["--n", "3", "bwb", "--weight=-2,1,1"])
    assert code == 0
    assert payload["result"] == {"i": 2, "mu": "0,0,0", "dim": 1}
    code, payload = run_json(["--n", "2", "bwb", "--weight=-1,0"])
    assert code == 0 and payload["result"] == "vanishes"


def test_bwb_requires_matching_rank_and_small_order():
    code, _ = run(["--n", "3", "bwb", "--weight=-1,0"])
    assert code == 3
    # ell = 2 < n = 3: cohomology subcommands reject the configuration
    code, _ = run(["--n", "3", "--mode", "zeta", "--zeta-order", "4",
                   "bwb", "--weight", "0,0,0"])
    assert code == 3


def test_step_table_command():
    code, payload = run_json(["--n", "3", "step-table", "--a", "1"])
    assert code == 0
    results = {tuple(row["j"]): row["result"] for row in payload["tuples"]}
    assert results[(2,)] == {"i": 1, "mu": "0,0,0", "dim": 1}
    assert results[(3,)] == "vanishes"


def test_wedge_table_command():
    code, payload = run_json(["--n", "3", "wedge-table", "--a", "2",
                              "--k", "1"])
    assert code == 0 and payload["all_vanish"]


def test_koszul_command_and_csv():
    code, payload = run_json(["--n", "2", "koszul", "--d-max", "4"])
    assert code == 0
    assert payload["exact"]
    assert [row["d"] for row in payload["rows"]] == [0, 1, 2, 3, 4]
    code, text = run(["--n", "2", "--format", "csv", "koszul",
                      "--d-max", "2"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("n,d,")
    assert len(lines) == 4


def test_decompose_command_round_trip():
    element = "chi[2,0]"
    code, payload = run_json(["--n", "2", "decompose", "--element", element,
                              "--untwisted"])
    assert code == 0
    assert payload["certificate"]["rank"] == payload["certificate"]["unknowns"]
    fs = [syntax.parse_chi(text, 2) for text in payload["f"]]
    assert recompose(fs) == syntax.parse_chi(element, 2)


def test_decompose_json_request(tmp_path):
    request = tmp_path / "req.json"
    request.write_text(json.dumps({"element": "chi[1,0,0]", "box": 4}))
    code, payload = run_json(["--n", "3", "--mode", "zeta", "--zeta-order",
                              "7", "decompose", "--json-file", str(request)])
    assert code == 0
    assert len(payload["f"]) == 3


def test_verify_suites():
    code, payload = run_json(["--n", "3", "verify", "kostant"])
    assert code == 0 and payload["passed"]
    code, payload = run_json(["--n", "2", "--degree-bound", "4",
                              "verify", "pbw"])
    assert code == 0 and payload["passed"]
    code, payload = run_json(["--n", "2", "verify", "relations"])
    assert code == 0 and payload["passed"] and payload["algebra_dim"] == 10
    code, payload = run_json(["--n", "2", "--degree-bound", "3",
                              "verify", "equivariance"])
    assert code == 0 and payload["passed"]
    code, payload = run_json(["--n", "2", "--degree-bound", "3",
                              "verify", "pairing"])
    assert code == 0 and payload["passed"]
    code, _ = run(["--n", "2", "verify", "no-such-suite"])
    assert code == 3


def test_verify_deterministic_given_seed():
    args = ["--n", "3", "--seed", "1", "verify", "confluence"]
    code1, text1 = run(args)
    code2, text2 = run(args)
    assert code1 == code2 == 0
    assert text1 == text2


def test_mode_flag_validation():
    code, _ = run(["--n", "2", "--mode", "zeta", "normal-form", "x[1,1]"])
    assert code == 3
    code, _ = run(["--n", "2", "--zeta-order", "5", "normal-form", "x[1,1]"])
    assert code == 3
    code, _ = run(["--n", "1", "normal-form", "x[1,1]"])
    assert code == 3
