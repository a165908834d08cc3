import json

import pytest

from prenichols.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_a2(capsys):
    code, out, _ = run(capsys, "classify", "--cartan", "A", "2", "z(3)")
    assert code == 0
    assert "Finite(A_2)" in out


def test_classify_expectation(capsys):
    code, _, err = run(capsys, "classify", "--qls", "z(3)", "1", "--words", "1", "12", "221", "--expect", "Finite(A_3)")
    assert code == 1 and "unmet" in err


def test_verify_step2_gap(capsys):
    code, out, _ = run(capsys, "verify-paper", "--scenario", "step2-gap")
    assert code == 0
    assert "left_module_member = False" in out


def test_hilbert_json(capsys):
    code, out, _ = run(capsys, "hilbert", "--preset", "hat_a2_omega", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["coeffs"][:6] == [1, 2, 4, 8, 13, 20]


def test_member_and_nf(capsys):
    code, out, _ = run(capsys, "member", "--preset", "hat_a2_omega", "x1112", "--expect", "true")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "nf", "x2*x1", "--cartan", "A", "2", "z(3)", "--relations", "x12")
    assert code == 0 and out.strip() == "x1*x2"


def test_twist_and_env(capsys):
    code, out, _ = run(capsys, "hopf", "--cartan", "A", "2", "z(3)", "--twist", "1,2=t", "--env", "t=z(5)",
                       "--relations", "x12", "--expect", "false")
    assert code == 0 and out.startswith("false")


def test_classify_words_with_prefix(capsys):
    code, out, _ = run(capsys, "classify", "--matrix", "z(3),1;z(3)^-1,z(3)", "--words", "x1", "x12")
    assert code == 0 and "Affine(A_1^(1))" in out


def test_matrix_option(capsys):
    code, out, _ = run(capsys, "defect", "--matrix", "z(3),1;z(3)^2,z(3)", "x1112", "--expect", "true")
    assert code == 0


@pytest.mark.parametrize(
    "argv,code",
    [
        (["member", "--preset", "hat_a2_omega", "x1 +"], 3),
        (["member", "--preset", "hat_a2_omega", "--degree-bound", "4", "x12^3"], 4),
        (["nichols", "--cartan", "A", "3", "z(3)", "--size-cap", "10"], 5),
        (["gb", "--preset", "nope"], 6),
        (["gb", "--cartan", "B", "2", "z(2)"], 6),
        (["bogus"], 2),
        (["gb"], 3),
        (["verify-paper", "--scenario", "nope"], 3),
        (["classify", "--cartan", "A", "2", "z(3)", "--words", "x9"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_output_is_deterministic(capsys):
    a = run(capsys, "verify-paper", "--scenario", "b2-cartan", "--scenario", "a2-n3-hopf")
    b = run(capsys, "verify-paper", "--scenario", "a2-n3-hopf", "--scenario", "b2-cartan", "--jobs", "2")
    assert a == b and a[0] == 0


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PRENICHOLS_DEGREE_BOUND", "4")
    assert run(capsys, "member", "--preset", "hat_a2_omega", "x12^3")[0] == 4


def test_preset_commands(capsys):
    code, out, _ = run(capsys, "preset", "list")
    assert code == 0 and "hat_a2_omega" in out
    code, out, _ = run(capsys, "preset", "show", "serre_only", "--param", "type=B", "--param", "theta=2", "--param", "N=5")
    assert code == 0 and "x2221" in out
