import random
from fractions import Fraction

import pytest

from supersphere.geometry import (Metric, VectorField, christoffel, divergence_i, divergence_ii,
                                  divergence_iii, euler_field, flat_metric, frame_expansion,
                                  gradient, gradient_coords, gradient_frame, laplacian,
                                  laplacian_flat, noether_current, osp_frame_flat)
from supersphere.grassmann import SpaceDims, SuperFun, superradius_sq
from supersphere.superlinalg import SuperMatrix

from helpers import perturbed_metric, rand_field, rand_superfun

D31 = SpaceDims(3, 1)


def x(d, i):
    return SuperFun.x(d, i)


def th(d, j):
    return SuperFun.theta(d, j)


def test_vector_field_convention():
    rng = random.Random(1)
    for _ in range(20):
        X = rand_field(D31, rng)
        for j in range(1, D31.total + 1):
            coord = SuperFun.coord(D31, j)
            expect = SuperFun.zero(D31)
            for p, part in X[j].homogeneous_parts():
                expect = expect + (-part if p * D31.parity(j) % 2 else part)
            assert X(coord) == expect


def test_flat_metric_blocks():
    g = flat_metric(SpaceDims(1, 0))
    assert g.comp(1, 1) == SuperFun.const(SpaceDims(1, 0), 1)
    g = flat_metric(D31)
    assert g.comp(4, 5) == SuperFun.const(D31, Fraction(1, 2))
    assert g.comp(5, 4) == SuperFun.const(D31, Fraction(-1, 2))
    assert g.comp(4, 4).is_zero()


def test_osp_frame():
    d = SpaceDims(2, 2)
    frame = osp_frame_flat(d)
    assert frame.e(3) == VectorField.coord(d, 3)
    assert frame.e(4) == VectorField.coord(d, 4, -2)
    g = flat_metric(d)
    G = frame.standard_gram()
    for k in range(1, d.total + 1):
        for j in range(1, d.total + 1):
            assert g.inner(frame.e(k), frame.e(j)) == SuperFun.const(d, G[k - 1][j - 1])
            expect = (-1) ** frame.parity(k) if k == j else 0
            assert g.inner(frame.e(k), frame.Je(j)) == SuperFun.const(d, expect)


@pytest.mark.parametrize("seed", range(20))
def test_frame_expansion(seed):
    rng = random.Random(seed)
    d = SpaceDims(rng.randint(1, 3), rng.randint(1, 2))
    v = rand_field(d, rng, parity=rng.randint(0, 1))
    assert frame_expansion(flat_metric(d), v) == v


def test_christoffel_flat_and_polar():
    g = flat_metric(D31)
    for i in range(1, 6):
        for j in range(1, 6):
            for l in range(1, 6):
                assert christoffel(g, i, j, l).is_zero()
    d = SpaceDims(2, 0)
    one, x1 = SuperFun.const(d, 1), x(d, 1)
    polar = Metric(SuperMatrix(d, 2, 0, [[one, SuperFun.zero(d)], [SuperFun.zero(d), x1 * x1]]))
    assert christoffel(polar, 2, 2, 1) == -x1
    assert christoffel(polar, 1, 2, 2) == x1.inverse()
    assert christoffel(polar, 1, 1, 1).is_zero()


def test_christoffel_graded_symmetry():
    rng = random.Random(7)
    d = SpaceDims(2, 1)
    for _ in range(3):
        g = perturbed_metric(d, rng)
        for i in range(1, 5):
            for j in range(1, 5):
                for l in range(1, 5):
                    s = (-1) ** (d.parity(i) * d.parity(j))
                    assert christoffel(g, i, j, l) == christoffel(g, j, i, l) * s


def test_divergence_examples():
    g = flat_metric(D31)
    assert divergence_i(g, VectorField.coord(D31, 1, x(D31, 1))) == SuperFun.const(D31, 1)
    assert divergence_i(g, VectorField.coord(D31, 4, th(D31, 1))) == SuperFun.const(D31, 1)
    assert divergence_i(g, VectorField.coord(D31, 4)).is_zero()
    assert divergence_iii(g, euler_field(D31)) == SuperFun.const(D31, 1)


@pytest.mark.parametrize("seed", range(10))
def test_three_divergences_flat(seed):
    rng = random.Random(seed)
    d = SpaceDims(rng.randint(1, 3), 1)
    g = flat_metric(d)
    X = rand_field(d, rng)
    a = divergence_i(g, X)
    assert a == divergence_ii(g, X) == divergence_iii(g, X)


@pytest.mark.parametrize("seed", range(4))
def test_three_divergences_perturbed(seed):
    rng = random.Random(50 + seed)
    d = SpaceDims(2, 1)
    g = perturbed_metric(d, rng)
    X = rand_field(d, rng)
    a = divergence_i(g, X)
    assert a == divergence_ii(g, X) == divergence_iii(g, X)


@pytest.mark.parametrize("seed", range(20))
def test_divergence_product_rule(seed):
    rng = random.Random(100 + seed)
    d = SpaceDims(2, 1)
    g = flat_metric(d)
    pf, pX = rng.randint(0, 1), rng.randint(0, 1)
    f = rand_superfun(d, rng, parity=pf)
    X = rand_field(d, rng, parity=pX)
    sign = (-1) ** (pf * pX)
    assert divergence_i(g, X.lmul(f)) == f * divergence_i(g, X) + X(f) * sign


def test_gradient_examples():
    g = flat_metric(D31)
    assert gradient(g, x(D31, 1)) == VectorField.coord(D31, 1)
    assert gradient(g, SuperFun.const(D31, 5)).is_zero()
    with pytest.raises(ValueError):
        gradient(g, x(D31, 1) + th(D31, 1))


@pytest.mark.parametrize("seed", range(20))
def test_gradient_defining_relation_and_symmetry(seed):
    rng = random.Random(200 + seed)
    d = SpaceDims(rng.randint(1, 3), rng.randint(1, 2))
    g = flat_metric(d)
    pf, pk = rng.randint(0, 1), rng.randint(0, 1)
    f = rand_superfun(d, rng, deg=3, parity=pf)
    k = rand_superfun(d, rng, deg=3, parity=pk)
    grad_f = gradient_frame(g, f)
    assert grad_f == gradient_coords(g, f)
    for j in range(1, d.total + 1):
        Y = VectorField.coord(d, j)
        expect = Y(f) if d.parity(j) * pf % 2 == 0 else -Y(f)
        assert g.inner(grad_f, Y) == expect
    assert grad_f(k) == gradient(g, k)(f) * (-1) ** (pf * pk)


def test_gradient_symmetry_perturbed():
    rng = random.Random(9)
    d = SpaceDims(2, 1)
    g = perturbed_metric(d, rng)
    for _ in range(5):
        pf, pk = rng.randint(0, 1), rng.randint(0, 1)
        f = rand_superfun(d, rng, parity=pf)
        k = rand_superfun(d, rng, parity=pk)
        assert gradient(g, f)(k) == gradient(g, k)(f) * (-1) ** (pf * pk)


def test_laplacian_examples():
    d = D31
    s = x(d, 1) ** 2 + x(d, 2) ** 2 + x(d, 3) ** 2
    assert laplacian_flat(d, s) == SuperFun.const(d, -6)
    assert laplacian_flat(d, th(d, 1) * th(d, 2)) == SuperFun.const(d, -4)
    for m, n in [(3, 1), (2, 2), (5, 1)]:
        dd = SpaceDims(m, n)
        assert laplacian_flat(dd, superradius_sq(dd)) == SuperFun.const(dd, -2 * dd.M)


@pytest.mark.parametrize("seed", range(20))
def test_laplacian_routes_agree(seed):
    rng = random.Random(300 + seed)
    d = SpaceDims(rng.randint(1, 3), rng.randint(1, 2))
    f = rand_superfun(d, rng, deg=3, parity=rng.randint(0, 1))
    g = flat_metric(d)
    lap = laplacian_flat(d, f)
    assert laplacian(g, f) == lap
    frame = g.frame
    local = SuperFun.zero(d)
    for j in range(1, d.total + 1):
        local = local - frame.e(j)(frame.Je(j)(f))
    assert local == lap


@pytest.mark.parametrize("seed", range(20))
def test_laplace_divergence_identities(seed):
    rng = random.Random(400 + seed)
    d = SpaceDims(2, 1)
    g = flat_metric(d)
    frame = g.frame
    pf, pk = rng.randint(0, 1), rng.randint(0, 1)
    f = rand_superfun(d, rng, parity=pf)
    k = rand_superfun(d, rng, parity=pk)
    cross = SuperFun.zero(d)
    for j in range(1, d.total + 1):
        term = frame.e(j)(k) * frame.Je(j)(f)
        cross = cross + term * (-1) ** (frame.parity(j) * pk)
    lhs = f * laplacian_flat(d, k)
    rhs = -divergence_i(g, gradient(g, k).lmul(f)) + cross * (-1) ** (pf * pk)
    assert lhs == rhs
    s = (-1) ** (pf * pk)
    diff = f * laplacian_flat(d, k) - k * laplacian_flat(d, f) * s
    assert diff == (-divergence_i(g, gradient(g, k).lmul(f))
                    + divergence_i(g, gradient(g, f).lmul(k)) * s)


def test_metric_inverse_parity():
    rng = random.Random(3)
    d = SpaceDims(2, 1)
    g = perturbed_metric(d, rng)
    for k in range(1, 5):
        for m in range(1, 5):
            e = g.inv(k, m)
            if not e.is_zero():
                assert e.parity() == (d.parity(k) + d.parity(m)) % 2


def test_noether_examples():
    d = D31
    x1, x2 = x(d, 1), x(d, 2)
    Y = noether_current(d, x1, VectorField.coord(d, 2))
    assert Y == VectorField.coord(d, 2, Fraction(1, 2))
    rot = VectorField.coord(d, 2, x1) - VectorField.coord(d, 1, x2)
    Y = noether_current(d, x1, rot)
    assert Y == VectorField.coord(d, 2, x1 * Fraction(1, 2)) + VectorField.coord(d, 1, x2 * Fraction(1, 2))
    g = flat_metric(d)
    assert divergence_i(g, Y).is_zero()
    Y = noether_current(d, x1 * th(d, 1), VectorField.coord(d, 1))
    assert divergence_i(g, Y).is_zero()
    with pytest.raises(ValueError):
        noether_current(d, x1 * x1, VectorField.coord(d, 1))
