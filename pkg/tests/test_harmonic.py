import json
import random
from math import comb

import pytest
import sympy as sp

from supersphere.geometry import VectorField, laplacian_flat, noether_current
from supersphere.grassmann import SpaceDims, SuperFun
from supersphere.harmonic import (VerificationReport, check_fundamental_solution, harmonic_basis,
                                  rotations, translations, verify_conserved,
                                  verify_divergence_theorem, verify_green, verify_mvt_ball,
                                  verify_mvt_sphere, verify_noether)
from supersphere.integrate import ball_volume
from supersphere.scalar import ExactSum

from helpers import rand_field, rand_superfun

D31 = SpaceDims(3, 1)
F_MVT = SuperFun.theta(D31, 1) * SuperFun.theta(D31, 2) - SuperFun.x(D31, 1) ** 2 * 2


def coeff_vector(f, keys):
    out = {}
    for I, c in f.comps.items():
        for coef, alpha, _, _ in c.iter_terms():
            out[(I, alpha)] = coef
    return [sp.Rational(out.get(k, 0).numerator, out.get(k, 0).denominator) if k in out else 0
            for k in keys]


def in_span(f, basis):
    keys = set()
    for g in basis + [f]:
        for I, c in g.comps.items():
            for _, alpha, _, _ in c.iter_terms():
                keys.add((I, alpha))
    keys = sorted(keys)
    A = sp.Matrix([coeff_vector(g, keys) for g in basis])
    B = A.col_join(sp.Matrix([coeff_vector(f, keys)]))
    return A.rank() == B.rank()


def test_basis_degree_one_is_everything():
    basis = harmonic_basis(D31, 1)
    assert len(basis) == 12
    x = lambda i: SuperFun.x(D31, i)
    th = lambda j: SuperFun.theta(D31, j)
    for f in [SuperFun.const(D31, 1), x(1), x(3), th(1), th(2), x(2) * th(1), x(3) * th(2)]:
        assert in_span(f, basis)
    assert not in_span(th(1) * th(2), basis)


def test_basis_contains_mvt_function():
    basis = harmonic_basis(D31, 4)
    assert in_span(F_MVT, basis)
    assert not in_span(SuperFun.x(D31, 1) ** 2, basis)
    for f in basis:
        assert laplacian_flat(D31, f).is_zero()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_basis_dimension_classical(m):
    d = SpaceDims(m, 0)
    expect = sum(comb(k + m - 1, m - 1) - (comb(k + m - 3, m - 1) if k >= 2 else 0)
                 for k in range(5))
    assert len(harmonic_basis(d, 4)) == expect


def test_basis_elements_independent():
    basis = harmonic_basis(SpaceDims(2, 1), 3)
    keys = sorted({(I, a) for g in basis for I, c in g.comps.items() for _, a, _, _ in c.iter_terms()})
    assert sp.Matrix([coeff_vector(g, keys) for g in basis]).rank() == len(basis)


@pytest.mark.parametrize("m,n", [(3, 0), (3, 1), (4, 1), (5, 1), (5, 2), (4, 2), (2, 1), (2, 0)])
def test_fundamental_solutions(m, n):
    rep = check_fundamental_solution(SpaceDims(m, n))
    assert rep.equal
    assert rep.lhs.is_zero()


def test_mvt_examples():
    rep = verify_mvt_sphere(F_MVT)
    assert rep.equal and rep.lhs.is_zero() and rep.rhs.is_zero()
    one = SuperFun.const(D31, 1)
    assert verify_mvt_sphere(one).equal
    assert verify_mvt_sphere(SuperFun.x(D31, 1)).equal
    rep = verify_mvt_ball(one)
    assert rep.equal
    assert rep.checks[0].lhs == ball_volume(D31)
    assert rep.checks[1].lhs.is_zero() and rep.checks[1].rhs.is_zero()
    rep = verify_mvt_ball(F_MVT)
    assert rep.checks[0].lhs.is_zero()
    assert str(rep.checks[1].lhs) == "-8/3 * pi * L^3" == str(rep.checks[1].rhs)
    assert verify_mvt_ball(SuperFun.x(D31, 1) * SuperFun.theta(D31, 1)).equal


def test_mvt_negative_control():
    f = SuperFun.x(D31, 1) ** 2
    with pytest.raises(ValueError):
        verify_mvt_sphere(f)
    assert not verify_mvt_sphere(f, check_harmonic=False).equal
    assert not verify_mvt_ball(f, check_harmonic=False).equal
    g = SuperFun.theta(D31, 1) * SuperFun.theta(D31, 2)
    assert not verify_mvt_ball(g, check_harmonic=False).equal


@pytest.mark.parametrize("seed", range(20))
def test_green_random_pairs(seed):
    rng = random.Random(seed)
    d = SpaceDims(rng.randint(2, 3), 1)
    f = rand_superfun(d, rng, deg=3, terms=3, parity=rng.randint(0, 1))
    k = rand_superfun(d, rng, deg=3, terms=3, parity=rng.randint(0, 1))
    assert verify_green(f, k).equal


def test_green_examples():
    f = SuperFun.x(D31, 1) ** 2 + SuperFun.theta(D31, 1) * SuperFun.theta(D31, 2)
    rep = verify_green(f, f)
    assert rep.equal and rep.lhs.is_zero()
    s = sum((SuperFun.x(D31, i) ** 2 for i in (1, 2, 3)), SuperFun.zero(D31))
    rep = verify_green(SuperFun.const(D31, 1), s)
    assert rep.equal and rep.lhs == ball_volume(D31) * -6
    assert verify_green(SuperFun.theta(D31, 1), SuperFun.theta(D31, 2)).equal


def test_divergence_theorem_examples():
    X = VectorField(D31, [SuperFun.x(D31, i) for i in (1, 2, 3)] + [SuperFun.zero(D31)] * 2)
    rep = verify_divergence_theorem(X)
    assert rep.equal and rep.lhs == ball_volume(D31) * 3
    rep = verify_divergence_theorem(VectorField.coord(D31, 4, SuperFun.theta(D31, 1)))
    assert rep.equal and rep.lhs == ball_volume(D31)
    rep = verify_divergence_theorem(VectorField.coord(D31, 5))
    assert rep.equal and rep.lhs.is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_divergence_theorem_random_fields(seed):
    rng = random.Random(100 + seed)
    d = SpaceDims(rng.randint(1, 3), 1)
    assert verify_divergence_theorem(rand_field(d, rng, parity=rng.randint(0, 1))).equal


def test_conserved_examples():
    x1, x2 = SuperFun.x(D31, 1), SuperFun.x(D31, 2)
    rot = VectorField.coord(D31, 1, x2) - VectorField.coord(D31, 2, x1)
    for X in [noether_current(D31, x1, VectorField.coord(D31, 2)), rot, VectorField.coord(D31, 1)]:
        rep = verify_conserved(X, radii=[1, 2, 3])
        assert rep.equal and len(rep.checks) == 3
    with pytest.raises(ValueError):
        verify_conserved(VectorField.coord(D31, 1, x1))


def test_killing_generators():
    assert len(translations(D31)) == 3
    assert len(rotations(SpaceDims(4, 1))) == 6
    rep = verify_noether(SuperFun.x(D31, 1) * SuperFun.theta(D31, 1), VectorField.coord(D31, 1))
    assert rep.equal and rep.checks[0].lhs.is_zero()


def test_report_json():
    rep = verify_mvt_sphere(F_MVT)
    obj = json.loads(json.dumps(rep.to_json()))
    assert set(obj) == {"theorem", "m", "n", "lhs", "rhs", "equal", "ms"}
    assert obj["theorem"] == "mvt_sphere" and obj["m"] == 3 and obj["n"] == 1
    assert obj["lhs"] == {"coeff": "0", "pi_pow_x2": 0, "L_pow": "0"}
    assert obj["equal"] is True
    assert isinstance(rep, VerificationReport) and bool(rep)
    assert ExactSum.from_json(obj["rhs"]).is_zero()
