"""Harmonic superfunctions and exact verifiers for the integral theorems on the superball."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (VectorField, divergence_i, flat_metric, laplacian_flat,
                       noether_current)
from .grassmann import SpaceDims, SuperFun, berezin_sign, render_superfun, superpower_R
from .integrate import (GAMMA, STD, ball_integral, ball_volume, boundary_flux,
                        classical_ball_volume, outer_normal, sphere_integral, sphere_volume)
from .scalar import ExactSum, RadialCoeff


@dataclass
class VerificationReport:
    theorem: str
    m: int
    n: int
    lhs: object
    rhs: object
    equal: bool
    ms: float = 0.0
    checks: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "m": self.m, "n": self.n,
               "lhs": _json_value(self.lhs), "rhs": _json_value(self.rhs),
               "equal": self.equal, "ms": round(self.ms, 3)}
        if self.checks:
            out["checks"] = [c.to_json() for c in self.checks]
        return out

    def __bool__(self) -> bool:
        return self.equal

    def __str__(self) -> str:
        mark = "equal" if self.equal else "NOT equal"
        lines = [f"{self.theorem} ({self.m}|{2 * self.n}): {self.lhs} vs {self.rhs} -> {mark}"]
        lines += ["  " + str(c) for c in self.checks]
        return "\n".join(lines)


def _json_value(v):
    if isinstance(v, ExactSum):
        return v.to_json()
    if isinstance(v, SuperFun):
        return render_superfun(v)
    return v


def _report(theorem, dims, lhs, rhs, start, checks=()) -> VerificationReport:
    checks = list(checks)
    equal = (lhs - rhs).is_zero() and all(c.equal for c in checks)
    return VerificationReport(theorem, dims.m, dims.n, lhs, rhs, equal,
                              (time.perf_counter() - start) * 1000, checks)


def underlying_value_at_origin(f: SuperFun) -> Fraction:
    """``f(0)``: the theta-free coefficient at x = 0."""
    return f.body().at_origin()


def _require_harmonic(f: SuperFun, dims: SpaceDims):
    if not laplacian_flat(dims, f).is_zero():
        raise ValueError(f"not harmonic: {render_superfun(f)}")


# ---------------------------------------------------------------------------
# Harmonic basis
# ---------------------------------------------------------------------------


def _x_exponents(m: int, k: int):
    """All alpha in N^m with |alpha| = k, in lexicographically descending order."""
    if m == 1:
        yield (k,)
        return
    for a in range(k, -1, -1):
        for rest in _x_exponents(m - 1, k - a):
            yield (a,) + rest


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis of a rational matrix by reduced row echelon form."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        A[r] = [v / piv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def _primitive(v: list[Fraction]) -> list[Fraction]:
    den = math.lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [Fraction(x, g) for x in ints]


def harmonic_basis(dims: SpaceDims, degree: int) -> list[SuperFun]:
    """Basis of ``ker laplacian_flat`` among superfunctions with x-degree <= degree.

    The flat Laplacian lowers the total degree (x plus theta) by exactly two,
    so the kernel is computed one total degree at a time and each basis
    element is homogeneous in degree and parity.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    m = dims.m
    subsets = [I for t in range(dims.odd + 1)
               for I in itertools.combinations(range(1, dims.odd + 1), t)]
    out = []
    for w in range(degree + dims.odd + 1):
        cols = [(I, alpha) for I in subsets if len(I) <= w and w - len(I) <= degree
                for alpha in _x_exponents(m, w - len(I))]
        if not cols:
            continue
        images = []
        row_index: dict = {}
        for I, alpha in cols:
            mono = SuperFun.coeff(dims, RadialCoeff.monomial(m, 1, alpha), I)
            img = {}
            for J, c in laplacian_flat(dims, mono).comps.items():
                for coef, beta, _, _ in c.iter_terms():
                    key = (J, beta)
                    row_index.setdefault(key, len(row_index))
                    img[key] = coef
            images.append(img)
        rows = [[Fraction(0)] * len(cols) for _ in row_index]
        for j, img in enumerate(images):
            for key, coef in img.items():
                rows[row_index[key]][j] = coef
        for vec in _nullspace(rows, len(cols)):
            vec = _primitive(vec)
            f = SuperFun.zero(dims)
            for (I, alpha), c in zip(cols, vec):
                if c:
                    f = f + SuperFun.coeff(dims, RadialCoeff.monomial(m, c, alpha), I)
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------


def check_fundamental_solution(dims: SpaceDims) -> VerificationReport:
    """``laplacian R^(2-M) = 0``, or ``laplacian log R = 0`` when M = 2."""
    start = time.perf_counter()
    M = dims.M
    f = superpower_R(dims, "log" if M == 2 else 2 - M)
    lhs = laplacian_flat(dims, f)
    zero = SuperFun.zero(dims)
    rep = VerificationReport("fundamental", dims.m, dims.n, lhs, zero, lhs.is_zero(),
                             (time.perf_counter() - start) * 1000)
    return rep


def verify_mvt_sphere(f: SuperFun, dims: SpaceDims | None = None,
                      check_harmonic: bool = True) -> VerificationReport:
    """Sphere integral of f against ``vol(S_L) f(0)``."""
    dims = dims or f.dims
    if check_harmonic:
        _require_harmonic(f, dims)
    start = time.perf_counter()
    lhs = sphere_integral(f, dims)
    rhs = sphere_volume(dims) * underlying_value_at_origin(f)
    return _report("mvt_sphere", dims, lhs, rhs, start)


def verify_mvt_ball(f: SuperFun, dims: SpaceDims | None = None,
                    check_harmonic: bool = True) -> VerificationReport:
    """Both ball identities; the report's own lhs/rhs are the gamma one."""
    dims = dims or f.dims
    if check_harmonic:
        _require_harmonic(f, dims)
    start = time.perf_counter()
    lhs_g = ball_integral(f, dims, GAMMA)
    rhs_g = ball_volume(dims) * underlying_value_at_origin(f)
    gamma = _report("mvt_ball_gamma", dims, lhs_g, rhs_g, start)
    t1 = time.perf_counter()
    lhs_s = ball_integral(f, dims, STD)
    top0 = f.top().at_origin()
    rhs_s = classical_ball_volume(dims.m) * (berezin_sign(dims.n) * 2 ** dims.n * top0)
    std = _report("mvt_ball_std", dims, lhs_s, rhs_s, t1)
    return _report("mvt_ball", dims, lhs_g, rhs_g, start, [gamma, std])


def _parity(f: SuperFun) -> int:
    p = f.parity()
    if p is None:
        raise ValueError(f"not homogeneous: {render_superfun(f)}")
    return p


def verify_green(f: SuperFun, k: SuperFun, dims: SpaceDims | None = None) -> VerificationReport:
    """Green's formula on the superball with the gamma retraction."""
    dims = dims or f.dims
    start = time.perf_counter()
    sign = (-1) ** (_parity(f) * _parity(k))
    bulk = f * laplacian_flat(dims, k) - k * laplacian_flat(dims, f) * sign
    lhs = ball_integral(bulk, dims, GAMMA)
    nu = outer_normal(dims)
    edge = f * nu(k) - k * nu(f) * sign
    rhs = -sphere_integral(edge, dims)
    return _report("green", dims, lhs, rhs, start)


def verify_divergence_theorem(X: VectorField, dims: SpaceDims | None = None) -> VerificationReport:
    """Ball integral of div X against the boundary flux.

    For even M <= 0 the retraction is singular at r = 0 and the flux may carry
    an L-independent term the ball integral does not see; such reports are
    unequal by exactly that constant.
    """
    dims = dims or X.dims
    start = time.perf_counter()
    lhs = ball_integral(divergence_i(flat_metric(dims), X), dims, GAMMA)
    rhs = boundary_flux(X, dims)
    return _report("divergence", dims, lhs, rhs, start)


def verify_conserved(X: VectorField, dims: SpaceDims | None = None,
                     radii=()) -> VerificationReport:
    """Flux of a divergence-free field vanishes identically in L (and at each given radius)."""
    dims = dims or X.dims
    if not divergence_i(flat_metric(dims), X).is_zero():
        raise ValueError("vector field is not divergence free")
    start = time.perf_counter()
    lhs = boundary_flux(X, dims)
    checks = [_report("conserved_at", dims, lhs.at(L), ExactSum(), start) for L in radii]
    return _report("conserved", dims, lhs, ExactSum(), start, checks)


def translations(dims: SpaceDims) -> list[VectorField]:
    return [VectorField.coord(dims, i) for i in range(1, dims.m + 1)]


def rotations(dims: SpaceDims) -> list[VectorField]:
    """``d_i x^j - d_j x^i`` for i < j."""
    out = []
    for i, j in itertools.combinations(range(1, dims.m + 1), 2):
        out.append(VectorField.coord(dims, i, SuperFun.x(dims, j))
                   - VectorField.coord(dims, j, SuperFun.x(dims, i)))
    return out


def verify_noether(f: SuperFun, xi: VectorField, dims: SpaceDims | None = None) -> VerificationReport:
    """``div Y_xi = 0`` for harmonic f and a Killing field xi, plus vanishing flux."""
    dims = dims or f.dims
    start = time.perf_counter()
    Y = noether_current(dims, f, xi)
    div = divergence_i(flat_metric(dims), Y)
    zero = SuperFun.zero(dims)
    div_check = VerificationReport("noether_div", dims.m, dims.n, div, zero, div.is_zero(),
                                   (time.perf_counter() - start) * 1000)
    flux = boundary_flux(Y, dims)
    return _report("noether", dims, flux, ExactSum(), start, [div_check])
