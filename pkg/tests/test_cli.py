import json
import subprocess
import sys

import pytest

from constacode.cli import main, parse_family_spec, parse_range
from constacode.errors import SpecParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "cprime:q=3,m=4,r=2,ell=1")
    assert code == 0
    rec = json.loads(out)
    assert rec["code"]["n"] == 40 and rec["code"]["k"] == 36
    assert rec["predicted"]["d"] == {"exact": 3}
    code, out, _ = run(capsys, "construct", "c:q=4,m=2,r=3,ell=2")
    rec = json.loads(out)
    assert (rec["code"]["n"], rec["code"]["k"]) == (5, 3)


def test_construct_errors(capsys):
    code, out, err = run(capsys, "construct", "cprime:q=3,m=4")
    assert code == 2 and out == "" and err
    code, _, err = run(capsys, "construct", "bogus")
    assert code == 2
    code, _, err = run(capsys, "construct", "cprime:q=6,m=2,r=5,ell=1")
    assert code == 3 and "NotPrime" in err
    code, _, err = run(capsys, "construct", "cprime:q=3,m=4,r=2,ell=9")
    assert code == 3


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_spec_parsing():
    s = parse_family_spec("c:q=5,m=2,r=2,ell=3")
    assert s.args() == (5, 2, 2, 3)
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("2,5") == [2, 5]
    assert parse_range("3..2") == []
    with pytest.raises(SpecParseError):
        parse_range("a..b")


def test_analyze_weights(capsys):
    code, out, _ = run(capsys, "analyze", "c:q=4,m=4,r=3,ell=2", "--weights")
    assert code == 0
    rec = json.loads(out)
    assert rec["enumerator"] == "1+10710z^48+411264z^60+257295z^64+362880z^68+6426z^80"
    assert sorted(int(w) for w in rec["weights"]) == [0, 48, 60, 64, 68, 80]
    assert rec["distance"]["lo"] == 48


def test_analyze_distance(capsys):
    code, out, _ = run(capsys, "analyze", "cprime:q=5,m=3,r=2,ell=1", "--distance")
    rec = json.loads(out)
    assert code == 0 and rec["distance"]["kind"] == "exact" and rec["distance"]["lo"] == 4
    code, out, _ = run(capsys, "analyze", "c:q=3,m=4,r=2,ell=0")
    rec = json.loads(out)
    assert rec["k"] == 0 and rec["distance"]["kind"] == "undefined" and rec["distance"]["lo"] is None


def test_analyze_dual_and_json_input(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "cprime:q=5,m=2,r=2,ell=1")
    rec = json.loads(out)["code"]
    path = tmp_path / "code.json"
    path.write_text(json.dumps(rec))
    code, out, _ = run(capsys, "analyze", str(path), "--dual", "--weights")
    assert code == 0
    assert json.loads(out)["enumerator"] == "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12"
    code, out, _ = run(capsys, "analyze", json.dumps(rec), "--distance")
    assert json.loads(out)["distance"]["lo"] == 4


def test_analyze_incomplete(capsys):
    code, out, _ = run(capsys, "analyze", "c:q=5,m=3,r=2,ell=5", "--weights", "--cap", "100", "--samples", "0")
    rec = json.loads(out)
    assert code == 4 and rec["weights"] is None
    # the distance is still closed by certificates
    assert rec["distance"]["kind"] == "exact" and rec["distance"]["lo"] == 10


def test_analyze_range_exit(capsys):
    code, out, _ = run(capsys, "analyze", "cprime:q=7,m=3,r=2,ell=1", "--cap", "10", "--samples", "0")
    rec = json.loads(out)
    assert rec["distance"]["kind"] == "range"
    assert code == 4


def test_table(capsys):
    code, out, _ = run(capsys, "table", "cprime", "q=3", "m=4", "r=2", "ell=1..3", "--format", "json")
    rows = json.loads(out)
    assert [(r["n"], r["k"], r["d"]) for r in rows] == [(40, 36, "3"), (40, 24, "8"), (40, 8, "21")]
    assert rows[0]["perfect"] is True
    code, out, _ = run(capsys, "table", "cprime", "q=3", "m=4", "r=2", "ell=3..2", "--format", "csv")
    assert code == 0 and out.strip().count("\n") == 0 and out.startswith("family,")
    code, out, _ = run(capsys, "table", "c", "q=4", "m=2", "--format", "text")
    assert code == 0 and "5" in out.splitlines()[2]
    code, _, _ = run(capsys, "table", "c", "q=6", "m=2")
    assert code == 3


def test_table_dimensions(capsys):
    from constacode.families import cfamily_dimension

    code, out, _ = run(capsys, "table", "c", "q=3..5", "m=2..3", "--format", "json", "--samples", "100")
    rows = json.loads(out)
    assert code == 0 and len(rows) > 5
    for r in rows:
        assert r["k"] == cfamily_dimension(r["q"], r["m"], r["r"], r["ell"])


def test_inspect(capsys):
    code, out, _ = run(capsys, "inspect", "3^4:2,0,0,2,1")
    assert code == 0 and json.loads(out)["order"] == 81
    code, out, _ = run(capsys, "inspect", "cprime:q=3,m=4,r=2,ell=1")
    assert json.loads(out)["zero_coset_leaders"] == [1]
    code, out, _ = run(capsys, "inspect", "cosets:q=3,M=80,r=2")
    rec = json.loads(out)
    assert sum(c["size"] for c in rec["cosets"]) == 40
    code, _, _ = run(capsys, "inspect", "cosets:q=3")
    assert code == 2


def test_verify_json_stable(capsys, tmp_path):
    code, out1, _ = run(capsys, "verify", "paper-examples", "--format", "json")
    assert code == 0
    rep = json.loads(out1)
    ids = [r["id"] for r in rep["records"]]
    assert len(ids) == len(set(ids))
    flagged = [r for r in rep["records"] if r["status"] == "flagged"]
    assert len(flagged) == 1 and "5-3-4-7" in flagged[0]["id"]
    code, out2, _ = run(capsys, "verify", "paper-examples", "--format", "json")
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)["records"]]
    assert strip(out1) == strip(out2)


def test_console_script():
    p = subprocess.run([sys.executable, "-m", "constacode.cli", "construct", "c:q=5,m=2,r=2,ell=3"], capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["code"]["k"] == 6
