"""Random generators shared by the test modules."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from supersphere import Metric, RadialCoeff, SpaceDims, SuperFun, SuperMatrix, VectorField


def rand_exponent(rng: random.Random, m: int, deg: int):
    k = rng.randint(0, deg)
    alpha = [0] * m
    for _ in range(k):
        alpha[rng.randrange(m)] += 1
    return tuple(alpha)


def theta_subsets(dims: SpaceDims, parity=None):
    out = []
    for t in range(dims.odd + 1):
        if parity is None or t % 2 == parity:
            out += list(itertools.combinations(range(1, dims.odd + 1), t))
    return out


def rand_superfun(dims: SpaceDims, rng: random.Random, deg: int = 2, terms: int = 4,
                  parity=None) -> SuperFun:
    subsets = theta_subsets(dims, parity)
    f = SuperFun.zero(dims)
    if not subsets:
        return f
    for _ in range(terms):
        I = rng.choice(subsets)
        c = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
        f = f + SuperFun.coeff(dims, RadialCoeff.monomial(dims.m, c, rand_exponent(rng, dims.m, deg)), I)
    return f


def rand_terms(dims: SpaceDims, rng: random.Random, deg: int = 2, terms: int = 4, parity=0):
    """Random superfunction together with its raw (c, I, alpha, e) description."""
    subsets = theta_subsets(dims, parity)
    raw = []
    f = SuperFun.zero(dims)
    for _ in range(terms):
        I = rng.choice(subsets)
        c = Fraction(rng.randint(-4, 4), rng.choice([1, 2]))
        alpha = rand_exponent(rng, dims.m, deg)
        e = 2 * rng.randint(0, 1) if rng.random() < 0.3 else 0
        raw.append((c, I, alpha, e))
        f = f + SuperFun.coeff(dims, RadialCoeff.monomial(dims.m, c, alpha, e), I)
    return f, raw


def rand_field(dims: SpaceDims, rng: random.Random, deg: int = 2, parity=None) -> VectorField:
    """Random polynomial vector field; homogeneous of the given parity if requested."""
    comps = []
    for k in range(1, dims.total + 1):
        cp = None if parity is None else (parity + dims.parity(k)) % 2
        comps.append(rand_superfun(dims, rng, deg, terms=rng.randint(0, 2), parity=cp))
    return VectorField(dims, comps)


def _linear(dims: SpaceDims, rng: random.Random) -> SuperFun:
    out = SuperFun.const(dims, 1)
    for i in range(1, dims.m + 1):
        out = out + SuperFun.x(dims, i) * Fraction(rng.randint(-2, 2), rng.choice([2, 3, 5]))
    return out


def perturbed_metric(dims: SpaceDims, rng: random.Random) -> Metric:
    """``diag(a_i^2, b_l^2 (-J_2/2))`` with linear a_i, b_l; sdet has an exact square root."""
    size = dims.total
    zero = SuperFun.zero(dims)
    rows = [[zero] * size for _ in range(size)]
    for i in range(dims.m):
        a = _linear(dims, rng)
        rows[i][i] = a * a
    for b in range(dims.m, size, 2):
        w = _linear(dims, rng)
        w = w * w
        rows[b][b + 1] = w * Fraction(1, 2)
        rows[b + 1][b] = w * Fraction(-1, 2)
    return Metric(SuperMatrix(dims, dims.m, dims.odd, rows))


def rand_even_supermatrix(dims: SpaceDims, p: int, q: int, rng: random.Random,
                          deg: int = 1) -> SuperMatrix:
    """Even supermatrix with invertible body (identity plus small even/odd perturbation)."""
    size = p + q
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            par = (int(i >= p) + int(j >= p)) % 2
            entry = rand_superfun(dims, rng, deg, terms=rng.randint(0, 2), parity=par)
            if i == j:
                entry = entry + rng.choice([13, 17, -19])
            row.append(entry)
        rows.append(row)
    return SuperMatrix(dims, p, q, rows)
