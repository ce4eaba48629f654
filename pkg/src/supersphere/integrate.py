"""Berezin integration over the superball and supersphere with radius L kept symbolic.

The retraction ``gamma`` sends ``x^j`` to ``x^j sqrt(1 + vartheta^2 / r^2)`` so that
the superradius R becomes the classical radius; ``std`` is the identity on x.
On the sphere of radius L every ``x^j`` pulls back to ``omega^j s`` with
``s = sqrt(L^2 - vartheta^2)`` and every ``r^e`` to ``s^e``; angular integrals
of the monomials ``omega^alpha`` are then done in closed form.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .geometry import VectorField, euler_field, flat_metric
from .grassmann import SpaceDims, SuperFun, berezin_sign, merge, superpower_R, theta_sq
from .scalar import ExactSum, ExactValue, gamma_half_continued, sphere_monomial_integral

GAMMA = "gamma"
STD = "std"
RETRACTIONS = (GAMMA, STD)


def _binom(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (a - i) / (i + 1)
    return out


class SphereIntegrand:
    """Polynomial in theta and omega with coefficients ``c * L^p``.

    ``terms`` maps ``(I, alpha, p)`` to a rational.  The same structure
    doubles for the superball with the radial variable R in place of L.
    """

    __slots__ = ("dims", "terms")

    def __init__(self, dims: SpaceDims, terms: dict | None = None):
        self.dims = dims
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, dims: SpaceDims, c=1, L_pow=0) -> "SphereIntegrand":
        return cls(dims, {((), (0,) * dims.m, Fraction(L_pow)): Fraction(c)})

    def __mul__(self, other: "SphereIntegrand") -> "SphereIntegrand":
        out: dict = {}
        for (I, a, p), c in self.terms.items():
            for (J, b, q), d in other.terms.items():
                sign, K = merge(I, J)
                if not sign:
                    continue
                key = (K, tuple(x + y for x, y in zip(a, b)), p + q)
                out[key] = out.get(key, 0) + sign * c * d
        return SphereIntegrand(self.dims, out)

    def __add__(self, other: "SphereIntegrand") -> "SphereIntegrand":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SphereIntegrand(self.dims, out)

    def __neg__(self):
        return SphereIntegrand(self.dims, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SphereIntegrand":
        return SphereIntegrand(self.dims, {k: v * c for k, v in self.terms.items()})

    def d_radius(self) -> "SphereIntegrand":
        """Derivative in the radial variable."""
        return SphereIntegrand(self.dims, {(I, a, p - 1): v * p for (I, a, p), v in self.terms.items()})

    def integrate(self) -> ExactSum:
        """Berezin integral over theta, then the angular integral over S^(m-1)."""
        top = self.dims.top
        sign = berezin_sign(self.dims.n)
        out = []
        for (I, alpha, p), c in self.terms.items():
            if I != top:
                continue
            angular = sphere_monomial_integral(alpha, self.dims.m)
            out.append(angular * ExactValue(sign * c, 0, p))
        return ExactSum(out)

    def __repr__(self) -> str:
        return f"SphereIntegrand({len(self.terms)} terms)"


@lru_cache(maxsize=None)
def _theta_sq_powers(dims: SpaceDims) -> tuple[dict, ...]:
    """(vartheta^2)^k as {I: c} for k = 0..n."""
    nil = theta_sq(dims)
    power = SuperFun.const(dims, 1)
    out = []
    for _ in range(dims.n + 1):
        out.append({I: c.at_origin() for I, c in power.comps.items()})
        power = power * nil
    return tuple(out)


def s_power(dims: SpaceDims, p) -> SphereIntegrand:
    """``(L^2 - vartheta^2)^(p/2)`` expanded in the nilpotent vartheta^2."""
    p = Fraction(p)
    zero = (0,) * dims.m
    terms: dict = {}
    for k, power in enumerate(_theta_sq_powers(dims)):
        coeff = _binom(p / 2, k) * (-1) ** k
        if not coeff:
            continue
        for I, c in power.items():
            key = (I, zero, p - 2 * k)
            terms[key] = terms.get(key, 0) + coeff * c
    return SphereIntegrand(dims, terms)


def pullback_sphere(f: SuperFun, dims: SpaceDims | None = None) -> SphereIntegrand:
    """Restriction of f to the supersphere of radius L (retraction gamma)."""
    dims = dims or f.dims
    out = SphereIntegrand(dims)
    cache: dict = {}
    for I, c in f.comps.items():
        if c.has_denominator():
            raise ValueError(f"cannot pull back a coefficient with a polynomial denominator: {c}")
        for coef, alpha, e, k in c.iter_terms():
            if k:
                raise ValueError("log terms are not integrated")
            p = sum(alpha) + e
            if p not in cache:
                cache[p] = s_power(dims, p)
            mono = SphereIntegrand(dims, {(I, tuple(alpha), Fraction(0)): coef})
            out = out + mono * cache[p]
    return out


def _sphere_density(dims: SpaceDims) -> SphereIntegrand:
    """``2^n L (L^2 - vartheta^2)^((m-2)/2)``."""
    return (s_power(dims, dims.m - 2) * SphereIntegrand.const(dims, 2 ** dims.n, 1))


def sphere_integral(f: SuperFun, dims: SpaceDims | None = None) -> ExactSum:
    """Integral of f over the supersphere S_L^(m-1|2n) as a polynomial in L."""
    dims = dims or f.dims
    return (_sphere_density(dims) * pullback_sphere(f, dims)).integrate()


def ball_integral(f: SuperFun, dims: SpaceDims | None = None, retraction: str = GAMMA) -> ExactSum:
    """Integral of ``dsvol_g f`` over the superball B_L^(m|2n)."""
    dims = dims or f.dims
    if retraction == GAMMA:
        return sphere_integral(f, dims).integrate_L()
    if retraction != STD:
        raise ValueError(f"unknown retraction {retraction!r}")
    top = f.top()
    if top.has_denominator():
        raise ValueError("cannot integrate a coefficient with a polynomial denominator")
    sign = berezin_sign(dims.n) * 2 ** dims.n
    out = []
    for coef, alpha, e, k in top.iter_terms():
        if k:
            raise ValueError("log terms are not integrated")
        p = sum(alpha) + e + dims.m
        if p == 0:
            raise ValueError("radial integral diverges logarithmically")
        angular = sphere_monomial_integral(alpha, dims.m)
        out.append(angular * ExactValue(sign * coef / p, 0, p))
    return ExactSum(out)


def sphere_volume(dims: SpaceDims) -> ExactSum:
    """Closed form ``(-1)^s 2^(n+1) pi^(m/2) / Gamma(M/2) L^(M-1)``; zero for M = 0, -2, ..."""
    M = dims.M
    if M <= 0 and M % 2 == 0:
        return ExactSum()
    value = (ExactValue(Fraction(berezin_sign(dims.n) * 2 ** (dims.n + 1)), dims.m, M - 1)
             / gamma_half_continued(Fraction(M, 2)))
    return ExactSum([value])


def ball_volume(dims: SpaceDims) -> ExactSum:
    """Closed form ``(-1)^s 2^n pi^(m/2) / Gamma(M/2 + 1) L^M``."""
    M = dims.M
    if M <= 0 and M % 2 == 0:
        return ExactSum()
    value = (ExactValue(Fraction(berezin_sign(dims.n) * 2 ** dims.n), dims.m, M)
             / gamma_half_continued(Fraction(M, 2) + 1))
    return ExactSum([value])


def classical_ball_volume(m: int) -> ExactSum:
    return ExactSum([ExactValue(Fraction(1), m, m) / gamma_half_continued(Fraction(m, 2) + 1)])


def outer_normal(dims: SpaceDims) -> VectorField:
    """``nu = E / R`` with E the Euler field."""
    return euler_field(dims).lmul(superpower_R(dims, -1))


def boundary_flux(X: VectorField, dims: SpaceDims | None = None) -> ExactSum:
    """``S eps(nu) * integral over S_L of <X, nu>``; both signs are +1 here."""
    dims = dims or X.dims
    g = flat_metric(dims)
    return sphere_integral(g.inner(X, outer_normal(dims)), dims)


def boundary_term(f: SuperFun, dims: SpaceDims | None = None) -> ExactSum:
    """Change of retraction from gamma to std, as a difference of ball integrals."""
    dims = dims or f.dims
    return ball_integral(f, dims, STD) - ball_integral(f, dims, GAMMA)


def boundary_term_direct(f: SuperFun, dims: SpaceDims | None = None) -> ExactSum:
    """The boundary term as a sum of restricted radial derivatives.

    In coordinates (R, phi, theta), with ``rho = r`` and ``tau = R``::

        b = -sum_(j=1..n) 1/j! int [ (-d_R)^(j-1) ( H (s_R - R)^j phi^* f ) ]_(R=L)

    where ``H = 2^n R (R^2 - vartheta^2)^((m-2)/2)`` carries the volume
    form in these coordinates and ``s_R = sqrt(R^2 - vartheta^2)`` is the
    pullback of r.  For even M <= 0 this can differ from :func:`boundary_term`
    by a constant in L coming from the origin.
    """
    dims = dims or f.dims
    base = _sphere_density(dims) * pullback_sphere(f, dims)
    diff = s_power(dims, 1) - SphereIntegrand.const(dims, 1, 1)
    total = ExactSum()
    power = SphereIntegrand.const(dims)
    for j in range(1, dims.n + 1):
        power = power * diff
        term = base * power
        for _ in range(j - 1):
            term = term.d_radius().scale(-1)
        total = total + term.integrate() * Fraction(1, math.factorial(j))
    return -total
