import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from supersphere.cli import Mul, Num, ParseError, Pow, Var, main, parse, parse_field, parse_superfun
from supersphere.grassmann import SpaceDims, SuperFun, render_superfun, superradius_sq

from helpers import rand_superfun

D31 = SpaceDims(3, 1)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_parse_ast():
    assert parse("2*x1^3", D31) == Mul(Num(2), Pow(Var("x", 1), 3))
    assert parse(" th1 ", D31) == Var("th", 1)


def test_parse_examples():
    th1, th2 = SuperFun.theta(D31, 1), SuperFun.theta(D31, 2)
    x1 = SuperFun.x(D31, 1)
    assert parse_superfun("th1*th2 - 2*x1^2", D31) == th1 * th2 - x1 * x1 * 2
    assert parse_superfun("th2*th1", D31) == -(th1 * th2)
    r2 = parse_superfun("r^2", D31)
    assert parse_superfun("x1^2 + R^2", D31) == x1 * x1 + superradius_sq(D31)
    assert parse_superfun("R^2", D31) - r2 == -(th1 * th2)
    assert parse_superfun("1/2*x1 - -x1", D31) == x1 * Fraction(3, 2)
    assert parse_superfun("-(x1+1)^2", D31) == -((x1 + 1) * (x1 + 1))
    assert parse_superfun("-x1^2*th1", D31) == -(x1 * x1 * th1)
    assert parse_superfun("(-x1)^2", D31) == x1 * x1
    assert parse_superfun("3/6", D31) == SuperFun.const(D31, Fraction(1, 2))


@pytest.mark.parametrize("src,pos", [("x1 +* 2", 4), ("x4", 0), ("th3", 0), ("R", 1),
                                     ("r^3", 2), ("x1^(1/2)", None), ("(x1", None),
                                     ("1/0", 0), ("x1 $ 2", 3), ("x1^-1", None)])
def test_parse_errors(src, pos):
    with pytest.raises(ParseError) as exc:
        parse_superfun(src, D31)
    if pos is not None:
        assert exc.value.pos == pos


def test_negative_even_powers():
    assert parse_superfun("R^(-2) * R^2", D31) == SuperFun.const(D31, 1)
    assert parse_superfun("r^-2*x1^2", D31) == parse_superfun("x1^2*r^(-2)", D31)


def test_parse_field():
    X = parse_field("x1;x2;x3;0;th1", D31)
    assert X[5] == SuperFun.theta(D31, 1)
    with pytest.raises(ParseError):
        parse_field("x1;x2", D31)


def test_render_roundtrip_corpus():
    rng = random.Random(0)
    corpus = ["th1*th2 - 2*x1^2", "th2*th1", "x1^2 + R^2", "R^(-2)", "1/2*x2*th1 - 3",
              "(x1 + th1)^3", "r^4 - x3^2*r^2", "R^4*th1", "-x1*(x2 - x3)*th2", "0"]
    d2 = SpaceDims(2, 2)
    while len(corpus) < 50:
        dims = D31 if len(corpus) % 2 else d2
        corpus.append((dims, render_superfun(rand_superfun(dims, rng, deg=3, terms=4))))
    for item in corpus:
        dims, src = (D31, item) if isinstance(item, str) else item
        f = parse_superfun(src, dims)
        assert parse_superfun(render_superfun(f), dims) == f, src


def test_volume_command(capsys):
    assert run(capsys, "volume", "--shape", "sphere", "--m", "3", "--n", "1") == (0, "-4 * pi", "")
    code, out, _ = run(capsys, "--json", "volume", "--shape", "ball", "--m", "3", "--n", "1")
    assert json.loads(out) == {"coeff": "-4", "pi_pow_x2": 2, "L_pow": "1"}
    assert run(capsys, "volume", "--shape", "ball", "--m", "2", "--n", "1")[1] == "0"


def test_integrate_command(capsys):
    assert run(capsys, "integrate", "--domain", "sphere", "--m", "3", "--n", "1",
               "--expr", "th1*th2 - 2*x1^2")[:2] == (0, "0")
    code, out, _ = run(capsys, "integrate", "--domain", "ball", "--retraction", "std",
                       "--m", "3", "--n", "1", "--expr", "th1*th2 - 2*x1^2")
    assert out == "-8/3 * pi * L^3"


def test_laplacian_and_divergence(capsys):
    assert run(capsys, "laplacian", "--m", "3", "--n", "1", "--expr", "th1*th2")[1] == "-4"
    for formula in ("i", "ii", "iii"):
        code, out, _ = run(capsys, "divergence", "--m", "3", "--n", "1",
                           "--field", "x1;x2;x3;th1;0", "--formula", formula)
        assert (code, out) == (0, "4")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "--json", "verify", "fundamental", "--m", "4", "--n", "1")
    assert code == 0 and json.loads(out)["equal"] is True
    code, _, err = run(capsys, "verify", "mvt-sphere", "--m", "3", "--n", "1", "--expr", "x1^2")
    assert code == 1 and "not harmonic" in err
    code, out, _ = run(capsys, "--json", "verify", "mvt-sphere", "--m", "3", "--n", "1",
                       "--expr", "x1^2", "--skip-harmonic-check")
    assert code == 2 and json.loads(out)["equal"] is False
    code, out, _ = run(capsys, "--json", "verify", "mvt-ball", "--m", "2", "--n", "1", "--degree", "2")
    reports = json.loads(out)
    assert code == 0 and all(r["equal"] for r in reports)
    assert run(capsys, "verify", "green", "--m", "3", "--n", "1", "--expr", "th1",
               "--expr2", "th2")[0] == 0
    assert run(capsys, "verify", "divergence", "--m", "3", "--n", "1",
               "--field", "x1;x2;x3;0;0")[0] == 0
    assert run(capsys, "verify", "noether", "--m", "3", "--n", "1", "--expr", "x1*th1")[0] == 0


def test_usage_errors(capsys):
    code, out, err = run(capsys, "volume", "--m", "3")
    assert code == 1 and out == "" and "required" in err
    code, out, err = run(capsys, "integrate", "--domain", "sphere", "--m", "3", "--n", "1",
                         "--expr", "x1 +* 2")
    assert code == 1 and "position 4" in err
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "verify", "green", "--m", "3", "--n", "1", "--expr", "x1")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supersphere", "volume", "--shape", "sphere",
                           "--m", "3", "--n", "0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "4 * pi * L^2"
