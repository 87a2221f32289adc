"""Command-line interface: argument handling, exit codes, deterministic output."""

import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from thetahecke.cli import main
from thetahecke.heckealg import HeckeElem, HeckeParams, gen_elem, he_mul
from thetahecke.laurent import LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


# -- hecke-mul -----------------------------------------------------------------


def test_hecke_mul_round_trip(capsys):
    code, obj, _ = run_json(
        capsys, "hecke-mul", "--l", "2", "--mu", "-3/2", "--a", "s1,t", "--b", "t,s1"
    )
    assert code == 0
    assert obj["mu"] == "-3/2"
    got = HeckeElem.from_json_obj(obj["product"])
    params = HeckeParams.signed(2, Fraction(-3, 2))
    s1, t = gen_elem(params, 1), gen_elem(params, 2)
    want = he_mul(params, he_mul(params, he_mul(params, s1, t), t), s1)
    assert got == want


def test_hecke_mul_identity_words(capsys):
    code, obj, _ = run_json(capsys, "hecke-mul", "--l", "1", "--mu", "1/2", "--a", "e", "--b", "t t")
    assert code == 0
    got = HeckeElem.from_json_obj(obj["product"])
    # t*t = (nu^mu - 1) t + nu^mu
    params = HeckeParams.signed(1, Fraction(1, 2))
    t = gen_elem(params, 1)
    assert got == he_mul(params, t, t)


def test_hecke_mul_rejects_bad_tokens(capsys):
    assert run(capsys, "hecke-mul", "--l", "2", "--mu", "1", "--a", "s9", "--b", "e")[0] == 2
    assert run(capsys, "hecke-mul", "--l", "2", "--mu", "1", "--a", "x", "--b", "e")[0] == 2


# -- module-verify -------------------------------------------------------------


def test_module_verify_rank_one(capsys):
    code, obj, err = run_json(capsys, "module-verify", "--l", "1", "--lprime", "1", "--mu", "1/2")
    assert code == 0
    assert obj["ok"] and obj["mode"] == "symbolic"
    assert obj["dimension"] == 3 and obj["grades"] == [1, 2]
    assert all("elapsed" not in rel for rel in obj["relations"])
    assert "module-verify" in err


def test_module_verify_negative_mu_space_form(capsys):
    code, obj, _ = run_json(capsys, "module-verify", "--l", "2", "--lprime", "2", "--mu", "-3/2")
    assert code == 0 and obj["ok"]


def test_module_verify_case_range_gate(capsys):
    code, out, err = run(
        capsys, "module-verify", "--l", "2", "--lprime", "2", "--mu", "1/2", "--case", "B"
    )
    assert code == 2 and out == "" and "out of range" in err
    code, obj, _ = run_json(
        capsys, "module-verify", "--l", "2", "--lprime", "2", "--mu", "1/2", "--case", "A"
    )
    assert code == 0 and obj["ok"]


def test_module_verify_dimension_cap(capsys):
    code, out, err = run(capsys, "module-verify", "--l", "6", "--lprime", "6", "--mu", "1")
    assert code == 2 and out == "" and "exceeds" in err


def test_module_verify_parallel_symbolic(capsys):
    code, obj, _ = run_json(
        capsys, "module-verify", "--l", "3", "--lprime", "3", "--mu", "1/2", "--jobs", "2"
    )
    assert code == 0
    assert obj["ok"] and obj["mode"] == "symbolic" and len(obj["relations"]) == 21


def test_module_verify_text(capsys):
    code, out, _ = run(
        capsys, "module-verify", "--l", "1", "--lprime", "2", "--mu", "2", "--format", "text"
    )
    assert code == 0
    assert "all relations hold" in out and "PASS" in out


# -- combinatorial subcommands ----------------------------------------------------


def test_theta_lift_cli(capsys):
    code, obj, _ = run_json(
        capsys, "theta-lift", "--alpha", "[]", "--beta", "[1]", "--l", "1", "--lprime", "1"
    )
    assert code == 0
    assert obj["lift"] == [
        {"bipartition": [[], [1]], "mult": 1},
        {"bipartition": [[1], []], "mult": 1},
    ]


def test_theta_lift_empty_renders_zero(capsys):
    code, obj, _ = run_json(
        capsys, "theta-lift", "--alpha", "[1]", "--beta", "[]", "--l", "1", "--lprime", "0"
    )
    assert code == 0 and obj["lift"] == []
    code, out, _ = run(
        capsys,
        "theta-lift", "--alpha", "[1]", "--beta", "[]", "--l", "1", "--lprime", "0",
        "--format", "text",
    )
    assert code == 0 and out.strip().endswith("0")


def test_theta_lift_errors(capsys):
    assert run(capsys, "theta-lift", "--alpha", "[2]", "--beta", "[]", "--l", "1", "--lprime", "1")[0] == 2
    assert run(capsys, "theta-lift", "--alpha", "nope", "--beta", "[]", "--l", "0", "--lprime", "1")[0] == 2


def test_first_occurrence_cli(capsys):
    code, obj, _ = run_json(
        capsys,
        "first-occurrence", "--alpha", "[1]", "--beta", "[]", "--l", "1",
        "--case", "A", "--dimV0", "0", "--dimVp0", "1",
    )
    assert code == 0
    assert (obj["n"], obj["n_tilde"], obj["c"]) == (3, 0, 1)
    assert obj["mu"] == "1/2" and obj["mu_sigma"] == "3/2"


def test_conservation_scan_cli(capsys):
    code, obj, _ = run_json(
        capsys,
        "conservation-scan", "--lmax", "2",
        "--case", "D", "--dimV0", "2", "--dimVp0", "4",
    )
    assert code == 0
    assert obj["all_double_c_residuals_zero"]
    assert len(obj["rows"]) == 1 + 2 + 5
    assert all(r["residual_double_c"] == 0 for r in obj["rows"])


def test_tower_flags_are_required(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["conservation-scan", "--lmax", "1", "--case", "A"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_chi_flag_accepts_negative(capsys):
    code, obj, _ = run_json(
        capsys,
        "first-occurrence", "--alpha", "[]", "--beta", "[]", "--l", "0",
        "--case", "Ct", "--dimV0", "2", "--dimVp0", "3", "--chi-minus-one", "-1",
    )
    assert code == 0 and obj["mu"] == "0"


def test_specialize_decompose_cli(capsys):
    code, obj, _ = run_json(capsys, "specialize-decompose", "--l", "1", "--lprime", "1")
    assert code == 0
    assert obj["matches_expected"]
    assert len(obj["multiplicities"]) == 3
    assert obj["dimension"] == 3


def test_coset_cli(capsys):
    code, obj, _ = run_json(capsys, "coset", "--l", "3", "--k", "1")
    assert code == 0
    (table,) = obj["tables"]
    assert table["count"] == 3 and table["kind"] == "sym_block"
    assert all(len(r["perm"]) == 3 for r in table["reps"])

    code, obj, _ = run_json(capsys, "coset", "--lprime", "2")
    assert code == 0
    counts = [t["count"] for t in obj["tables"]]
    assert counts == [2**k * math.comb(2, k) for k in range(3)]


def test_coset_flag_misuse(capsys):
    assert run(capsys, "coset", "--l", "2", "--lprime", "2")[0] == 2
    assert run(capsys, "coset")[0] == 2


# -- determinism across processes ----------------------------------------------------


def cli_bytes(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "thetahecke.cli", *argv],
        capture_output=True,
        check=True,
    )
    return proc.stdout


@pytest.mark.parametrize(
    "argv",
    [
        ("module-verify", "--l", "2", "--lprime", "2", "--mu", "-3/2"),
        ("hecke-mul", "--l", "2", "--mu", "-3/2", "--a", "s1,t", "--b", "t,s1"),
        ("conservation-scan", "--lmax", "2", "--case", "A", "--dimV0", "1", "--dimVp0", "2"),
    ],
)
def test_stdout_is_byte_identical_between_runs(argv):
    first, second = cli_bytes(*argv), cli_bytes(*argv)
    assert first == second
    json.loads(first)


def test_console_entry_point():
    proc = subprocess.run(
        ["thetahecke", "coset", "--l", "2"], capture_output=True, check=False
    )
    if proc.returncode != 0:
        pytest.skip("console script not on PATH in this environment")
    json.loads(proc.stdout)
