import json

import pytest

from froblip.cli import main


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


@pytest.fixture
def half(tmp_path):
    return write(tmp_path, "half.json", {"rationals": ["1/2", "1/2"]})


@pytest.fixture
def quarters(tmp_path):
    return write(tmp_path, "quarters.json", {"rationals": ["1/4"] * 4})


def test_build_numeric(tmp_path, capsys):
    p = write(tmp_path, "thirds.json", {"rationals": ["1/3", "1/3"]})
    assert main(["build", p]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["delta"] - 0.6309297536) < 1e-9
    assert doc["basis"] == ["1/3"]
    assert doc["exponents"] == [[1], [1]]


def test_build_symbolic(tmp_path, capsys):
    p = write(tmp_path, "sym.json",
              {"generators": ["l"], "monomials": [[5], [1]]})
    assert main(["build", p]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["delta"] is None
    assert doc["exponents"] == [[5], [1]]


def test_build_round_trip(tmp_path, capsys):
    p = write(tmp_path, "a.json", {"rationals": ["1/2", "1/4"]})
    assert main(["build", p]) == 0
    doc = json.loads(capsys.readouterr().out)
    p2 = tmp_path / "b.json"
    p2.write_text(json.dumps(doc))
    assert main(["build", str(p2)]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    assert doc == doc2


def test_parse_error_exit_2(tmp_path, capsys):
    p = write(tmp_path, "bad.json", {"rationals": ["1/0"]})
    assert main(["build", p]) == 2
    out = capsys.readouterr()
    assert out.out == ""  # errors only on stderr
    assert "1/0" in out.err


def test_malformed_json_exit_2(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert main(["build", str(p)]) == 2
    assert capsys.readouterr().out == ""


def test_decide_exit_codes(tmp_path, capsys, half, quarters):
    assert main(["decide", half, quarters]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"] == "EQUIVALENT"
    assert doc["certificate"]["p"] == 2 and doc["certificate"]["q"] == 1

    a = write(tmp_path, "s1.json",
              {"generators": ["u", "v"], "monomials": [[2, 0], [0, 1]]})
    b = write(tmp_path, "s2.json",
              {"generators": ["u", "v"], "monomials": [[1, 0], [0, 2]]})
    assert main(["decide", a, b]) == 10
    doc = json.loads(capsys.readouterr().out)
    assert doc["reason"] == "ITERATION_COUNTING"

    assert main(["decide", half, quarters, "--pq-bound", "1"]) == 11


def test_decide_two_branch(tmp_path, capsys):
    a = write(tmp_path, "t1.json",
              {"generators": ["l"], "monomials": [[5], [1]]})
    b = write(tmp_path, "t2.json",
              {"generators": ["l"], "monomials": [[3], [2]]})
    assert main(["decide", a, b]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["reason"] == "TWO_BRANCH_SPECIAL"


def test_gamma_sweep_csv(tmp_path, capsys):
    p = write(tmp_path, "binom.json",
              {"generators": ["a", "b"], "monomials": [[1, 0], [0, 1]]})
    assert main(["gamma", p, "--dirs", "9", "--k-max", "60"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "# frobenius-lipschitz v0.1.0"
    assert lines[1] == "theta_1,theta_2,gamma_analytic,gamma_empirical,stderr"
    assert len(lines) == 11
    mid = lines[2 + 4].split(",")
    assert abs(float(mid[0]) - 0.7071) < 1e-3
    assert abs(float(mid[2]) - 0.9803) < 1e-3


def test_gamma_theta_outside_cone(tmp_path, capsys):
    p = write(tmp_path, "binom.json",
              {"generators": ["a", "b"], "monomials": [[1, 0], [0, 1]]})
    assert main(["gamma", p, "--theta=-1,1"]) == 4
    assert capsys.readouterr().out == ""


def test_gamma_analytic_noncoplanar_domain_error(tmp_path, capsys):
    p = write(tmp_path, "sym.json",
              {"generators": ["l"], "monomials": [[5], [1]]})
    assert main(["gamma", p, "--analytic"]) == 4
    out = capsys.readouterr()
    assert "NotCoplanar" in out.err


def test_multiplicity_csv(tmp_path, capsys):
    p = write(tmp_path, "binom.json",
              {"generators": ["a", "b"], "monomials": [[1, 0], [0, 1]]})
    assert main(["multiplicity", p, "--bound", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "# frobenius-lipschitz v0.1.0"
    assert lines[1] == "z_1,z_2,m"
    rows = {tuple(map(int, l.split(",")[:2])): int(l.split(",")[2])
            for l in lines[2:]}
    assert rows[(1, 1)] == 2
    assert rows[(2, 1)] == 3


def test_cutset_json(tmp_path, capsys):
    p = write(tmp_path, "a.json", {"rationals": ["1/2", "1/4"]})
    assert main(["cutset", p, "--t", "1/4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [d["word"] for d in doc] == ["11", "12", "2"]
    assert main(["cutset", p]) == 2  # neither --t nor --exp-k


def test_matchable_json(tmp_path, capsys, half, quarters):
    assert main(["matchable", half, quarters, "--exp-k", "4",
                 "--search"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["feasible"] is True
    assert doc["m0"] <= 2


def test_frobenius1d(capsys):
    assert main(["frobenius1d", "3", "5"]) == 0
    assert capsys.readouterr().out.strip() == "7"
    assert main(["frobenius1d", "4", "6"]) == 4  # gcd 2


def test_determinism(tmp_path, capsys, half, quarters):
    outs = []
    for _ in range(2):
        main(["decide", half, quarters])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    for _ in range(2):
        main(["gamma", half, "--dirs", "3", "--k-max", "30"])
        outs.append(capsys.readouterr().out)
    assert outs[2] == outs[3]


def test_output_file(tmp_path, half, quarters):
    out = tmp_path / "verdict.json"
    assert main(["decide", half, quarters, "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["result"] == "EQUIVALENT"
