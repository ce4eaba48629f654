"""Semi-Riemannian supergeometry in coordinates on R^{m|2n}.

Vector fields carry their components to the right of the coordinate
derivations, ``X = d/dx^k . X^k``, so that ``X(x^j) = (-1)^(|x^j||X^j|) X^j``.
Every sign in this module follows from that convention together with a
metric that is linear from the right: ``<X a, Y b> = (-1)^(|a||Y|) <X, Y> a b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .grassmann import SpaceDims, SuperFun, sqrt_even
from .superlinalg import SuperMatrix, sm_inverse, superdet


def _sgn(power: int) -> int:
    return -1 if power % 2 else 1


def _signed(f: SuperFun, power: int) -> SuperFun:
    return -f if power % 2 else f


class VectorField:
    """``X = sum_k d_k . X^k`` over all m+2n coordinates (1-based in the API)."""

    __slots__ = ("dims", "comps")

    def __init__(self, dims: SpaceDims, comps: Sequence):
        if len(comps) != dims.total:
            raise ValueError(f"expected {dims.total} components, got {len(comps)}")
        self.dims = dims
        self.comps = [c if isinstance(c, SuperFun) else SuperFun.const(dims, c) for c in comps]

    @classmethod
    def zero(cls, dims: SpaceDims) -> "VectorField":
        return cls(dims, [SuperFun.zero(dims)] * dims.total)

    @classmethod
    def coord(cls, dims: SpaceDims, k: int, coeff=1) -> "VectorField":
        """``d_k . coeff``."""
        comps = [SuperFun.zero(dims)] * dims.total
        comps[k - 1] = coeff if isinstance(coeff, SuperFun) else SuperFun.const(dims, coeff)
        return cls(dims, comps)

    def __getitem__(self, k: int) -> SuperFun:
        return self.comps[k - 1]

    def parity(self) -> int | None:
        ps = set()
        for k, c in enumerate(self.comps, 1):
            for p, _ in c.homogeneous_parts():
                ps.add((p + self.dims.parity(k)) % 2)
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def homogeneous_parts(self) -> list[tuple[int, "VectorField"]]:
        out = []
        for par in (0, 1):
            comps = []
            for k, c in enumerate(self.comps, 1):
                want = (par + self.dims.parity(k)) % 2
                comps.append(c.odd_part() if want else c.even_part())
            X = VectorField(self.dims, comps)
            if not X.is_zero():
                out.append((par, X))
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __call__(self, f: SuperFun) -> SuperFun:
        """Action on a function: ``(d_k . h)(f) = (-1)^(|k||h|) h d_k(f)``."""
        out = SuperFun.zero(self.dims)
        for k, c in enumerate(self.comps, 1):
            if c.is_zero():
                continue
            df = f.derive(k)
            if df.is_zero():
                continue
            pk = self.dims.parity(k)
            for p, h in c.homogeneous_parts():
                out = out + _signed(h * df, pk * p)
        return out

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.dims, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.dims, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self) -> "VectorField":
        return VectorField(self.dims, [-a for a in self.comps])

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return all(a == b for a, b in zip(self.comps, other.comps))

    __hash__ = None

    def rmul(self, a) -> "VectorField":
        """``X . a``."""
        return VectorField(self.dims, [c * a for c in self.comps])

    def lmul(self, a) -> "VectorField":
        """``a . X``; moving a past d_k costs (-1)^(|a||k|)."""
        if not isinstance(a, SuperFun):
            return self.rmul(a)
        comps = []
        for k, c in enumerate(self.comps, 1):
            pk = self.dims.parity(k)
            acc = SuperFun.zero(self.dims)
            for p, part in a.homogeneous_parts():
                acc = acc + _signed(part * c, p * pk)
            comps.append(acc)
        return VectorField(self.dims, comps)

    def __repr__(self) -> str:
        parts = [f"d{k}.({c})" for k, c in enumerate(self.comps, 1) if not c.is_zero()]
        return "VectorField(" + " + ".join(parts or ["0"]) + ")"


def euler_field(dims: SpaceDims) -> VectorField:
    """``sum x^i d_(x^i) + sum theta^j d_(theta^j)`` (coefficients written on the left)."""
    comps = [SuperFun.x(dims, i) for i in range(1, dims.m + 1)]
    comps += [-SuperFun.theta(dims, j) for j in range(1, dims.odd + 1)]
    return VectorField(dims, comps)


class Metric:
    """Even supersymmetric metric given by its component matrix ``g_ij = <d_i, d_j>``."""

    def __init__(self, g: SuperMatrix, frame: "OSpFrame | None" = None):
        self.dims = g.dims
        if (g.p, g.q) != (self.dims.m, self.dims.odd):
            raise ValueError("metric block structure must be m|2n")
        self.g = g
        self.frame = frame
        self._ginv = None
        self._dg: dict = {}
        self._sqrt = None

    @property
    def ginv(self) -> SuperMatrix:
        """``g^(km)`` with ``g_lk g^km = delta_l^m``."""
        if self._ginv is None:
            self._ginv = sm_inverse(self.g)
        return self._ginv

    def comp(self, i: int, j: int) -> SuperFun:
        return self.g[i - 1, j - 1]

    def inv(self, k: int, m: int) -> SuperFun:
        return self.ginv[k - 1, m - 1]

    def d(self, l: int, i: int, j: int) -> SuperFun:
        """``d_l g_ij``."""
        key = (l, i, j)
        if key not in self._dg:
            self._dg[key] = self.comp(i, j).derive(l)
        return self._dg[key]

    def sdet(self) -> SuperFun:
        return superdet(self.g)

    def sqrt_abs_sdet(self) -> SuperFun:
        if self._sqrt is None:
            D = self.sdet()
            if D.body().is_zero():
                raise ValueError("degenerate metric")
            if D.body().sign() < 0:
                D = -D
            try:
                self._sqrt = sqrt_even(D)
            except ValueError as exc:
                raise ValueError(f"sdet g = {D} has no exact square root") from exc
        return self._sqrt

    def inner(self, X: VectorField, Y: VectorField) -> SuperFun:
        """``<X, Y> = sum (-1)^(|X^i||j|) g_ij X^i Y^j``."""
        dims = self.dims
        out = SuperFun.zero(dims)
        for i in range(1, dims.total + 1):
            Xi = X[i]
            if Xi.is_zero():
                continue
            for j in range(1, dims.total + 1):
                gij = self.comp(i, j)
                Yj = Y[j]
                if gij.is_zero() or Yj.is_zero():
                    continue
                pj = dims.parity(j)
                for p, part in Xi.homogeneous_parts():
                    out = out + _signed(gij * part * Yj, p * pj)
        return out


@dataclass
class OSpFrame:
    """Frame ``e_1..e_(m+2n)`` whose Gram matrix is the standard block form g_0."""

    dims: SpaceDims
    vectors: list[VectorField]
    t: int = 0
    s: int = field(default=-1)

    def __post_init__(self):
        if self.s < 0:
            self.s = self.dims.m - self.t

    def e(self, k: int) -> VectorField:
        return self.vectors[k - 1]

    def J_index(self, k: int) -> tuple[int, int]:
        """``J e_k = sign * e_idx`` as (sign, idx)."""
        if k <= self.t:
            return -1, k
        if k <= self.t + self.s:
            return 1, k
        if (k - self.t - self.s) % 2 == 1:
            return 1, k + 1
        return -1, k - 1

    def Je(self, k: int) -> VectorField:
        sign, idx = self.J_index(k)
        v = self.e(idx)
        return v if sign > 0 else -v

    def parity(self, k: int) -> int:
        return 0 if k <= self.t + self.s else 1

    def standard_gram(self) -> list[list[int | Fraction]]:
        """The matrix g_0 = diag(-1_t, 1_s, J_2, ..., J_2)."""
        size = self.dims.total
        G = [[0] * size for _ in range(size)]
        for k in range(self.t):
            G[k][k] = -1
        for k in range(self.t, self.t + self.s):
            G[k][k] = 1
        for b in range(self.t + self.s, size, 2):
            G[b][b + 1] = -1
            G[b + 1][b] = 1
        return G


def flat_metric(dims: SpaceDims) -> Metric:
    """``diag(1_m, -J_2n / 2)``, i.e. ``<d_theta^j, d_theta^(j+1)> = 1/2`` for odd j."""
    size = dims.total
    zero = SuperFun.zero(dims)
    rows = [[zero] * size for _ in range(size)]
    for i in range(dims.m):
        rows[i][i] = SuperFun.const(dims, 1)
    for b in range(dims.m, size, 2):
        rows[b][b + 1] = SuperFun.const(dims, Fraction(1, 2))
        rows[b + 1][b] = SuperFun.const(dims, Fraction(-1, 2))
    return Metric(SuperMatrix(dims, dims.m, dims.odd, rows), osp_frame_flat(dims))


def osp_frame_flat(dims: SpaceDims) -> OSpFrame:
    vectors = [VectorField.coord(dims, k) for k in range(1, dims.m + 1)]
    for l in range(dims.n):
        k = dims.m + 2 * l + 1
        vectors.append(VectorField.coord(dims, k))
        vectors.append(VectorField.coord(dims, k + 1, -2))
    return OSpFrame(dims, vectors, t=0, s=dims.m)


def frame_expansion(g: Metric, v: VectorField, frame: OSpFrame | None = None) -> VectorField:
    """``sum_j <v, e_j> J e_j``."""
    frame = frame or g.frame
    out = VectorField.zero(g.dims)
    for j in range(1, g.dims.total + 1):
        out = out + frame.Je(j).lmul(g.inner(v, frame.e(j)))
    return out


def christoffel(g: Metric, i: int, j: int, l: int) -> SuperFun:
    """``Gamma_ij^l`` with ``nabla_(d_i) d_j = Gamma_ij^l d_l``."""
    dims = g.dims
    pi, pj = dims.parity(i), dims.parity(j)
    out = SuperFun.zero(dims)
    for k in range(1, dims.total + 1):
        gkl = g.inv(k, l)
        if gkl.is_zero():
            continue
        pk = dims.parity(k)
        bracket = (g.d(i, j, k) + _signed(g.d(j, i, k), pi * pj)
                   - _signed(g.d(k, i, j), pk * (pi + pj)))
        if not bracket.is_zero():
            out = out + bracket * gkl
    return out * Fraction(1, 2)


def _coord_div(X: VectorField) -> SuperFun:
    out = SuperFun.zero(X.dims)
    for k in range(1, X.dims.total + 1):
        out = out + X[k].derive(k)
    return out


def divergence_i(g: Metric, X: VectorField) -> SuperFun:
    """``|sdet g|^(-1/2) d_k(|sdet g|^(1/2) X^k)``."""
    root = g.sqrt_abs_sdet()
    out = SuperFun.zero(g.dims)
    for k in range(1, g.dims.total + 1):
        if not X[k].is_zero():
            out = out + (root * X[k]).derive(k)
    return root.inverse() * out


def divergence_ii(g: Metric, X: VectorField) -> SuperFun:
    """``d_k X^k + 1/2 (-1)^(|m| + |l|(|m|+|k|)) g^mk d_l g_km X^l``."""
    dims = g.dims
    out = _coord_div(X)
    corr = SuperFun.zero(dims)
    for l in range(1, dims.total + 1):
        Xl = X[l]
        if Xl.is_zero():
            continue
        pl = dims.parity(l)
        trace = SuperFun.zero(dims)
        for m in range(1, dims.total + 1):
            pm = dims.parity(m)
            for k in range(1, dims.total + 1):
                gmk = g.inv(m, k)
                dg = g.d(l, k, m)
                if gmk.is_zero() or dg.is_zero():
                    continue
                trace = trace + _signed(gmk * dg, pm + pl * (pm + dims.parity(k)))
        corr = corr + trace * Xl
    return out + corr * Fraction(1, 2)


def covariant_column(g: Metric, X: VectorField, k: int, m: int) -> SuperFun:
    """Component A^m_k of ``nabla_(d_k) X = d_m . A^m_k``."""
    dims = g.dims
    pk, pm = dims.parity(k), dims.parity(m)
    out = _signed(X[m].derive(k), pk * pm)
    for l in range(1, dims.total + 1):
        if X[l].is_zero():
            continue
        gamma = christoffel(g, k, l, m)
        if not gamma.is_zero():
            out = out + _signed(gamma * X[l], pm * (1 + pk + dims.parity(l)))
    return out


def divergence_iii(g: Metric, X: VectorField) -> SuperFun:
    """Supertrace of ``Y -> (-1)^(|X||Y|) nabla_Y X``, split over homogeneous parts of X."""
    dims = g.dims
    out = SuperFun.zero(dims)
    for px, part in X.homogeneous_parts():
        for k in range(1, dims.total + 1):
            pk = dims.parity(k)
            # (-1)^(|X||k|) from the map, (-1)^(|k|(|X|+1)) from the supertrace
            out = out + _signed(covariant_column(g, part, k, k), px * pk + pk * (px + 1))
    return out


def divergence(g: Metric, X: VectorField, formula: str = "i") -> SuperFun:
    return {"i": divergence_i, "ii": divergence_ii, "iii": divergence_iii}[formula](g, X)


def gradient_frame(g: Metric, f: SuperFun, frame: OSpFrame | None = None) -> VectorField:
    """``nabla f = sum_j (-1)^(|e_j||f|) e_j(f) J e_j``."""
    frame = frame or g.frame
    dims = g.dims
    out = VectorField.zero(dims)
    for pf, part in f.homogeneous_parts():
        for j in range(1, dims.total + 1):
            ej_f = frame.e(j)(part)
            if ej_f.is_zero():
                continue
            out = out + frame.Je(j).lmul(_signed(ej_f, frame.parity(j) * pf))
    return out


def gradient_coords(g: Metric, f: SuperFun) -> VectorField:
    """Solve ``<nabla f, d_j> = (-1)^(|j||f|) d_j f`` for the components of nabla f."""
    dims = g.dims
    comps = [SuperFun.zero(dims) for _ in range(dims.total)]
    for pf, part in f.homogeneous_parts():
        rhs = [_signed(part.derive(j), dims.parity(j) * pf) for j in range(1, dims.total + 1)]
        for i in range(1, dims.total + 1):
            acc = SuperFun.zero(dims)
            for j in range(1, dims.total + 1):
                gji = g.inv(j, i)
                if not gji.is_zero() and not rhs[j - 1].is_zero():
                    acc = acc + rhs[j - 1] * gji
            comps[i - 1] = comps[i - 1] + _signed(acc, dims.parity(i) * (pf + 1))
    return VectorField(dims, comps)


def gradient(g: Metric, f: SuperFun) -> VectorField:
    if f.parity() is None:
        raise ValueError("gradient needs a homogeneous superfunction")
    if g.frame is not None:
        return gradient_frame(g, f)
    return gradient_coords(g, f)


def laplacian(g: Metric, f: SuperFun) -> SuperFun:
    """``-div(nabla f)``."""
    out = SuperFun.zero(g.dims)
    for _, part in f.homogeneous_parts():
        out = out - divergence_iii(g, gradient(g, part))
    return out


def laplacian_flat(dims: SpaceDims, f: SuperFun) -> SuperFun:
    """``-(sum d_x^2 - 4 sum_(j odd) d_theta^j d_theta^(j+1)) f``."""
    acc = SuperFun.zero(dims)
    for i in range(1, dims.m + 1):
        acc = acc + f.derive_x(i).derive_x(i)
    for j in range(1, dims.odd, 2):
        acc = acc - f.theta_derive(j + 1).theta_derive(j) * 4
    return -acc


def noether_current(dims: SpaceDims, f: SuperFun, xi: VectorField,
                    check_harmonic: bool = True) -> VectorField:
    """``Y = 1/2 e_j(f) Je_j(f) xi - xi(f) e_j(f) Je_j`` for the flat metric."""
    if check_harmonic and not laplacian_flat(dims, f).is_zero():
        raise ValueError("noether_current needs a harmonic superfunction")
    frame = osp_frame_flat(dims)
    energy = SuperFun.zero(dims)
    flux = VectorField.zero(dims)
    for j in range(1, dims.total + 1):
        ej_f = frame.e(j)(f)
        if ej_f.is_zero():
            continue
        energy = energy + ej_f * frame.Je(j)(f)
        flux = flux + frame.Je(j).lmul(ej_f)
    return xi.lmul(energy * Fraction(1, 2)) - flux.lmul(xi(f))
