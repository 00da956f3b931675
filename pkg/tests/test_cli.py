import subprocess
import sys

import pytest

from malleq.cli import main, run
from malleq.proof import show_proof
from golden import SYMMETRIC, intro_pair


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text + "\n", encoding="utf-8")
        return str(path)

    return write


def test_check(files):
    code, out = run(["check", files("p.proof", "(impL (ax a) (ax b))")])
    assert code == 0
    assert out.splitlines() == ["ok", "a, (a -o b) |- b"]


def test_check_context_mismatch(files):
    path = files("bad.proof", "(impR (ex 1 2 (dplus x (impL (ax a) (ax b)) (impL (ax c) (ax b)))))")
    code, out = run(["check", path])
    assert code == 2
    assert len(out.splitlines()) == 1
    assert path in out and "root.0.0" in out and "context mismatch" in out


def test_check_syntax_error(files):
    path = files("bad.proof", "(ax")
    code, out = run(["check", path])
    assert code == 2 and f"{path}:2:1" in out


def test_equiv_intro_pair(files):
    p, q = intro_pair()
    a, b = files("p.proof", show_proof(p)), files("q.proof", show_proof(q))
    assert run(["equiv", a, b]) == (0, "equivalent")
    assert run(["equiv", a, b, "--oracle"]) == (0, "equivalent")


def test_equiv_witness(files):
    a = files("p.proof", show_proof(SYMMETRIC))
    b = files("q.proof", "(dplus x (plusR (a +[y] a) (ax a)) (plusL (a +[y] a) (ax a)))")
    code, out = run(["equiv", a, b, "--witness"])
    lines = out.splitlines()
    assert code == 1 and lines[0] == "inequivalent"
    assert lines[1] == "pair (0,2)"
    assert lines[2].startswith("first: leaf") and lines[3].startswith("second: leaf")
    assert run(["equiv", a, b, "--oracle"])[0] == 1


def test_equiv_conclusion_mismatch(files):
    code, _ = run(["equiv", files("a", "(ax a)"), files("b", "(ax b)")])
    assert code == 2


def test_slice(files):
    path = files("p.proof", "(dplus x (plusL (a +[y] b) (ax a)) (plusR (a +[y] b) (ax b)))")
    code, out = run(["slice", path, "--explicit"])
    assert code == 0 and out.splitlines() == ["ok", "{(0,2)}", "{(1,3)}"]
    code, out = run(["slice", path])
    assert "(0,2): (x ? 1 : 0)" in out.splitlines()
    assert run(["bdt-slice", path, "--pair", "1,3"]) == (0, "ok\n(x ? 0 : 1)")
    assert run(["bdt-slice", path, "--pair", "1,9"])[0] == 2
    assert run(["bdt-slice", path, "--pair", "nope"])[0] == 2


def test_bdt_commands(files):
    t1 = files("t1.bdt", "(x ? (y ? 1 : 0) : 1)")
    t2 = files("t2.bdt", "(y ? 1 : (x ? 0 : 1))")
    t3 = files("t3.bdt", "(x ? 0 : 1)")
    assert run(["bdt", "equiv", t1, t2]) == (0, "equivalent")
    assert run(["bdt", "equiv", t1, t2, "--oracle"]) == (0, "equivalent")
    code, out = run(["bdt", "equiv", t1, t3, "--witness"])
    assert code == 1 and out.splitlines()[0] == "inequivalent" and len(out.splitlines()) == 3
    assert run(["bdt", "eval", t1, "--valuation", "x=0,y=1"]) == (1, "false")
    assert run(["bdt", "eval", t1, "--valuation", "x=1"]) == (0, "true")
    assert run(["bdt", "eval", t1, "--valuation", "x=0"])[0] == 2
    assert run(["bdt", "equiv", t1])[0] == 2
    nf = files("nf.bdt", "(x ? (x ? 0 : 1) : 1)")
    code, out = run(["bdt", "equiv", nf, t1])
    assert code == 2 and nf in out


def test_encode(files, tmp_path):
    t = files("t.bdt", "(x ? (y ? 1 : 0) : 1)")
    code, out = run(["encode", t, "--vars", "2", "--check-representation"])
    assert code == 0 and out.splitlines()[0] == "ok"
    target = str(tmp_path / "out.proof")
    assert run(["encode", t, "--vars", "2", "-o", target]) == (0, "ok")
    assert run(["check", target])[0] == 0
    assert run(["encode", t, "--vars", "1"])[0] == 2


def test_reduce(files):
    g = files("line.txt", "b -> f\nf -> s\ns -> e")
    code, out = run(["reduce", "ord-proof", g, "--f", "f", "--s", "s"])
    assert code == 0 and out.splitlines()[0] == "equivalent"
    code, out = run(["reduce", "ord-bdt", g, "--f", "s", "--s", "f"])
    assert code == 1 and out.splitlines()[0] == "inequivalent"
    assert run(["reduce", "ord-bdt", g, "--f", "b", "--s", "f"])[0] == 2
    assert run(["reduce", "ord-bdt", files("bad.txt", "a -> b\nb -> a"), "--f", "a", "--s", "b"])[0] == 2


def test_gen():
    code, out = run(["gen", "bdt", "--seed", "42", "--vars", "4", "--depth", "4"])
    assert code == 0 and out == run(["gen", "bdt", "--seed", "42", "--vars", "4", "--depth", "4"])[1]
    code, out = run(["gen", "proof-pair", "--seed", "5"])
    assert code == 0 and out.splitlines()[1].startswith("expected: ")
    code, out = run(["gen", "line", "--vars", "5"])
    assert code == 0 and out.splitlines()[-1].startswith("# f=")


def test_gen_pair_round_trip(files):
    _, out = run(["gen", "proof-pair", "--seed", "8", "--vars", "2"])
    lines = out.splitlines()
    a, b = files("a.proof", lines[2]), files("b.proof", lines[3])
    verdict = run(["equiv", a, b])[1]
    assert lines[1] == f"expected: {verdict}"


def test_mall(files):
    p = files("p.mall", "(with x (ex 1 2 (plusL (a +[y] b) (ax a))) (ex 1 2 (plusR (a +[y] b) (ax b))))")
    assert run(["mall", "check", p]) == (0, "ok\n|- (a +[y] b), (~a &[x] ~b)")
    assert run(["mall", "equiv", p, p]) == (0, "equivalent")
    assert run(["mall", "equiv", p, p, "--oracle"]) == (0, "equivalent")
    assert run(["mall", "equiv", p])[0] == 2


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["check", "/no/such/file"])[0] == 2


def test_budget_exceeded(files, monkeypatch):
    t = files("t.bdt", "(x ? 0 : (y ? 1 : 0))")
    monkeypatch.setenv("MALLEQ_ORACLE_BUDGET", "1")
    code, out = run(["bdt", "equiv", t, t, "--oracle"])
    assert code == 2 and "budget" in out


def test_main_prints(files, capsys):
    assert main(["check", files("p.proof", "(ax a)")]) == 0
    assert capsys.readouterr().out == "ok\na |- a\n"
    assert main(["check", "/no/such/file"]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_module_entry_point(files):
    path = files("p.proof", "(ax a)")
    r = subprocess.run([sys.executable, "-m", "malleq.cli", "check", path], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[0] == "ok"
