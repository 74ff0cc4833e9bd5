import pytest

from amalgams.cli import (
    Options,
    cmd_dispatch,
    main,
    parse_input,
    run_harness,
    socle_dimension,
    verify_paper,
)
from amalgams.errors import ParseError, UnknownReference
from amalgams.ring import make_ring

INTERSECTION = """\
# comment line
field p=101
ring A vars x
ring B vars X, Y
hom f A -> B : x -> X
ideal J in B : X, Y
amalgam W24 : f, J
"""

FINITE = """\
zring Z6 n=6
fhom id6 Z6 -> Z6 : 0, 1, 2, 3, 4, 5
fideal J3 in Z6 : 0, 3
famalgam W : id6, J3
"""


def dispatch(text, command, **kw):
    session = parse_input(text)
    return cmd_dispatch(session, command, Options(**kw))


def test_parse_happy_path():
    session = parse_input(INTERSECTION)
    assert sorted(session.decls) == ["A", "B", "J", "W24", "f"]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_input("field p=101\nring A vars x\nring A vars y\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse_input("ring A vars x ideal: x + x^2\n")
    assert err.value.line == 1
    with pytest.raises(UnknownReference):
        parse_input("field p=101\nring A vars x\nhom f A -> Bogus : x -> x\n")
    with pytest.raises(ParseError) as err:
        parse_input("ring A vars x ideal: x^\n")
    assert err.value.line == 1


def test_present_report():
    report = dispatch(INTERSECTION, ["present", "W24"])
    assert report.lines == [
        "K = x*z1 - z1^2, x*z2 - z1*z2",
        "certificate = Certified",
    ]
    assert report.status == 0


def test_classify_report():
    report = dispatch(INTERSECTION, ["classify", "W24"])
    assert report.lines[:3] == ["dim = 2", "depth = 1", "cm = false"]
    assert "betti = 1;2;1" in report.lines


def test_classify_ring_with_equidim_flag():
    text = "field p=101\nring R vars a, b, c, d ideal: a*c, a*d, b*c, b*d\n"
    report = dispatch(text, ["classify", "R"], assume_equidim=["R"])
    assert "serre = S1" in report.lines
    report2 = dispatch(text, ["classify", "R"])
    assert "serre = S1?" in report2.lines


def test_canonical_report():
    text = "field p=101\nring A0 vars x, y ideal: x^2, x*y, y^2\n"
    report = dispatch(text, ["canonical", "A0"])
    assert report.lines[0] == "mu = 2"


def test_hom_into_report():
    text = "field p=101\nring A vars x\nideal I in A : x\nduplication D : A, I\n"
    report = dispatch(text, ["hom-into", "D"])
    assert report.lines[0] == "generators = x - z1"


def test_finite_check_report():
    report = dispatch(FINITE, ["finite", "check", "W"])
    assert "primes = 3" in report.lines
    assert "classification = match" in report.lines
    assert "cardinality = ok" in report.lines


def test_trivext_declarations():
    text = (
        "field p=101\n"
        "ring A vars x\n"
        "trivext T : A, module gens 1 relations x*e1\n"
    )
    report = dispatch(text, ["present", "T"])
    assert report.lines[0] == "K = x*z1, z1^2"
    assert report.lines[1] == "certificate = Certified"


def test_trivext_canonical_declaration():
    text = (
        "field p=101\n"
        "ring A0 vars x, y ideal: x^2, x*y, y^2\n"
        "trivext G : A0, module canonical\n"
    )
    report = dispatch(text, ["classify", "G"])
    assert "gorenstein = true" in report.lines


def test_unknown_command():
    with pytest.raises(ParseError):
        dispatch(INTERSECTION, ["bogus"])


def test_prime_override():
    session = parse_input(INTERSECTION, prime=32003)
    assert session.get("A", "ring").ambient.p == 32003


def test_reports_deterministic():
    a = dispatch(INTERSECTION, ["classify", "W24"]).render()
    b = dispatch(INTERSECTION, ["classify", "W24"]).render()
    assert a == b


def test_main_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.alg"
    good.write_text(INTERSECTION)
    assert main([str(good), "present", "W24"]) == 0
    out = capsys.readouterr().out
    assert "certificate = Certified" in out

    bad = tmp_path / "bad.alg"
    bad.write_text("ring A vars x ideal: x + x^2\n")
    assert main([str(bad), "present", "W"]) == 2
    err = capsys.readouterr().err
    assert err.strip().startswith("parse error:")
    assert err.count("\n") == 1

    missing = tmp_path / "missing.alg"
    assert main([str(missing), "present", "W"]) == 1


def test_main_flags(tmp_path):
    f = tmp_path / "serre.alg"
    f.write_text("ring R vars a, b, c, d ideal: a*c, a*d, b*c, b*d\n")
    assert main(["--assume-equidim", "R", str(f), "classify", "R"]) == 0
    assert main(["--prime", "32003", str(f), "classify", "R"]) == 0


def test_socle_dimension_oracle():
    A0 = make_ring(101, ["x", "y"], ["x^2", "x*y", "y^2"])
    assert socle_dimension(A0) == 2
    G = make_ring(101, ["x", "y"], ["x^2", "y^2"])
    assert socle_dimension(G) == 1


def test_harness_all_pass():
    results = run_harness(101)
    assert results and all(ok for _, ok in results)


def test_verify_paper_report():
    report = verify_paper()
    assert report.status == 0
    assert report.lines[-1] == "result = PASS"
    assert "determinism = PASS" in report.lines
    assert "characteristic-robustness = PASS" in report.lines
