import json

import pytest

from kempner.cli import build_parser, main, run


def payload(argv):
    code, text = run(argv)
    assert code == 0
    return json.loads(text)


def assert_string_ints(node):
    """Envelope integers must be decimal strings; booleans stay booleans."""
    if isinstance(node, dict):
        for v in node.values():
            assert_string_ints(v)
    elif isinstance(node, list):
        for v in node:
            assert_string_ints(v)
    else:
        assert not isinstance(node, int) or isinstance(node, bool), node


def test_ell_payload():
    env = payload(["ell", "10"])
    assert env["schema_version"] == "1"
    assert env["command"] == "ell"
    assert env["result"] == {"b": "10", "beta": "8", "K": "3", "ell": "72"}
    assert isinstance(env["timing_ms"], int)
    assert_string_ints(env["result"])
    assert_string_ints(env["params"])


def test_beta_payload():
    env = payload(["beta", "24"])
    assert env["result"]["beta"] == "18"
    assert env["result"]["exponents"] == [
        {"prime": "2", "exponent": "1"},
        {"prime": "3", "exponent": "2"},
    ]


def test_radical_payload():
    assert payload(["radical", "24"])["result"]["radical"] == "6"


def test_construct_payload():
    env = payload(["construct", "10"])
    res = env["result"]
    assert res["start"] == "0"
    assert res["difference"] == "125"
    assert res["length"] == "72"
    assert res["excluded_digit"] == "9"
    assert res["verified"] is True
    assert res["last_term"] == "8875"
    env = payload(["construct", "10", "--explain"])
    checks = env["result"]["separation_checks"]
    assert [c["gcd"] for c in checks] == ["5", "25", "125"]
    assert all(c["holds"] is True for c in checks)


def test_verify_ap():
    env = payload(["verify-ap", "0", "125", "72", "--base", "10", "--exclude", "9"])
    assert env["result"]["verified"] is True
    env = payload(["verify-ap", "0", "125", "73", "--base", "10", "--exclude", "9"])
    assert env["result"]["verified"] is False
    assert env["result"]["violation"] == {"index": "72", "term": "9000", "position": "3"}
    env = payload(["verify-ap", "0", "3", "2", "--base", "3", "--allow", "0,1"])
    assert env["result"]["verified"] is True
    env = payload(["verify-ap", "0", "3", "2", "--base", "3", "--allow", "0,2"])
    assert env["result"]["verified"] is False
    assert env["result"]["violation"]["index"] == "1"


def test_certificate_payload():
    env = payload(["certificate", "125", "--base", "10"])
    res = env["result"]
    assert res["bound"] == "72"
    assert res["rows"][-1]["lambda_k"] == "80"
    assert res["first_break_k"] == "3"


def test_search_payload():
    env = payload(["search", "--base", "4", "--window", "256", "--max-diff", "64"])
    res = env["result"]
    assert (res["length"], res["difference"], res["start"]) == ("6", "2", "0")
    assert res["excluded_digit"] == "3"
    assert res["verified"] is True
    assert res["exhaustive"] is True


def test_search_default_window_uses_policy():
    env = payload(["search", "--base", "4"])
    assert env["params"]["window"] == "64"
    assert env["params"]["max_diff"] == "16"
    assert env["result"]["length"] == "6"


def test_ratio_report_and_csv():
    env = payload(["ratio-report", "--lo", "100", "--hi", "200", "--modulus", "6"])
    res = env["result"]
    assert res["min_ratio"] == {"numerator": "27", "denominator": "32", "decimal": "0.843750"}
    assert res["min_at"] == "192"
    code, text = run(["ratio-report", "--lo", "100", "--hi", "200", "--format", "csv", "--buckets", "5"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "bucket,count"
    assert len(lines) == 6


def test_density_scan_payload():
    env = payload(["density-scan", "--limit", "1000"])
    assert env["result"]["ratio"]["numerator"] == "81"
    assert env["result"]["ratio"]["denominator"] == "250"
    blocks = env["result"]["blocks"]
    assert blocks[0] == {"j": "0", "lo": "1", "hi": "1", "members": "0", "width": "1"}


def test_witnesses_payload_and_csv():
    env = payload(["witnesses", "--kind", "limsup", "--count", "3"])
    rows = env["result"]["rows"]
    assert [(r["n"], r["beta"]) for r in rows] == [("6", "4"), ("10", "8"), ("18", "16")]
    code, text = run(["witnesses", "--kind", "liminf", "--count", "2", "--format", "csv"])
    assert text.splitlines()[0] == "n,beta,ratio"
    assert text.splitlines()[1].startswith("2,1,0.5")


def test_csv_rejected_for_scalar_payloads(capsys):
    assert main(["ell", "10", "--format", "csv"]) == 1
    assert "tabular" in capsys.readouterr().err


def test_exit_codes(capsys):
    assert main(["beta", "1"]) == 1
    capsys.readouterr()
    assert main(["radical", str(2 * 10**12)]) == 2
    capsys.readouterr()
    assert main(["search", "--base", "10", "--window", "100000", "--max-diff", "10000",
                 "--budget", "1000"]) == 2
    capsys.readouterr()
    assert main(["ell", "10"]) == 0


def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["nosuchcmd"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["ell"])  # missing argument
    assert exc.value.code == 1


def test_result_bytes_stable_across_runs_and_threads():
    a = payload(["search", "--base", "5", "--window", "625", "--max-diff", "125"])
    b = payload(["search", "--base", "5", "--window", "625", "--max-diff", "125",
                 "--threads", "1"])
    assert json.dumps(a["result"], sort_keys=True) == json.dumps(b["result"], sort_keys=True)
    c = payload(["ell", "10"])
    d = payload(["ell", "10"])
    assert json.dumps(c["result"]) == json.dumps(d["result"])


def test_out_writes_identical_file(tmp_path):
    target = tmp_path / "envelope.json"
    code, text = run(["ell", "10", "--out", str(target)])
    assert code == 0
    assert target.read_text(encoding="utf-8") == text


def test_verify_ap_requires_one_digit_spec(capsys):
    assert main(["verify-ap", "0", "1", "2", "--base", "10"]) == 1
    capsys.readouterr()
    assert main(["verify-ap", "0", "1", "2", "--base", "10",
                 "--exclude", "9", "--allow", "0,1"]) == 1


def test_digit_letters_accepted():
    env = payload(["verify-ap", "0", "1", "2", "--base", "16", "--exclude", "f"])
    assert env["result"]["verified"] is True
