"""Superfunctions on R^{m|2n}: polynomial-radial coefficients times Grassmann monomials."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .scalar import (RadialCoeff, join_signed, poly_ring, render_monomial, render_radial,
                     _strip_s)

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class SpaceDims:
    """Dimension m|2n; coordinates are indexed 1..m (even) then m+1..m+2n (odd)."""

    m: int
    n: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise ValueError(f"invalid dimension {self.m}|{2 * self.n}")

    @property
    def M(self) -> int:
        """Superdimension m - 2n."""
        return self.m - 2 * self.n

    @property
    def odd(self) -> int:
        return 2 * self.n

    @property
    def total(self) -> int:
        return self.m + 2 * self.n

    @property
    def top(self) -> MultiIndex:
        return tuple(range(1, 2 * self.n + 1))

    def parity(self, k: int) -> int:
        """Parity of coordinate k (1-based over all m+2n coordinates)."""
        if not 1 <= k <= self.total:
            raise IndexError(f"coordinate {k} out of range 1..{self.total}")
        return 0 if k <= self.m else 1

    def __str__(self) -> str:
        return f"{self.m}|{2 * self.n}"


def berezin_sign(n: int) -> int:
    """(-1)^s(m,2n) with s(m,2n) = n(2n-1)."""
    return -1 if (n * (2 * n - 1)) % 2 else 1


def merge(I: MultiIndex, J: MultiIndex) -> tuple[int, MultiIndex]:
    """theta^I * theta^J = sign * theta^K; sign 0 when I and J overlap."""
    if set(I) & set(J):
        return 0, ()
    inversions = sum(1 for a in I for b in J if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(I + J))


Coefficient = Union[int, Fraction, RadialCoeff]


class SuperFun:
    """``f = sum_I theta^I f_I`` with ``f_I`` a :class:`RadialCoeff`.

    Grassmann monomials sit to the left of their coefficient; since the
    coefficients are even this is only a reading convention.
    """

    __slots__ = ("dims", "comps")

    def __init__(self, dims: SpaceDims, comps: dict | None = None):
        self.dims = dims
        self.comps = {tuple(I): c for I, c in (comps or {}).items() if not c.is_zero()}

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, dims: SpaceDims) -> "SuperFun":
        return cls(dims)

    @classmethod
    def const(cls, dims: SpaceDims, c) -> "SuperFun":
        return cls(dims, {(): RadialCoeff.const(dims.m, c)})

    @classmethod
    def coeff(cls, dims: SpaceDims, c: RadialCoeff, I: Iterable[int] = ()) -> "SuperFun":
        I = tuple(I)
        if list(I) != sorted(set(I)) or any(not 1 <= j <= dims.odd for j in I):
            raise ValueError(f"invalid multi-index {I}")
        return cls(dims, {I: c})

    @classmethod
    def x(cls, dims: SpaceDims, i: int) -> "SuperFun":
        return cls(dims, {(): RadialCoeff.x(dims.m, i)})

    @classmethod
    def theta(cls, dims: SpaceDims, j: int) -> "SuperFun":
        if not 1 <= j <= dims.odd:
            raise IndexError(f"odd index {j} out of range 1..{dims.odd}")
        return cls(dims, {(j,): RadialCoeff.const(dims.m, 1)})

    @classmethod
    def r_pow(cls, dims: SpaceDims, e) -> "SuperFun":
        return cls(dims, {(): RadialCoeff.r_pow(dims.m, e)})

    @classmethod
    def coord(cls, dims: SpaceDims, k: int) -> "SuperFun":
        """Coordinate function number k among all m+2n coordinates."""
        return cls.x(dims, k) if dims.parity(k) == 0 else cls.theta(dims, k - dims.m)

    # queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.comps

    def parity(self) -> int | None:
        """0 or 1 for homogeneous input (zero counts as even), None if mixed."""
        ps = {len(I) % 2 for I in self.comps}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def homogeneous_parts(self) -> list[tuple[int, "SuperFun"]]:
        parts = []
        for p in (0, 1):
            part = SuperFun(self.dims, {I: c for I, c in self.comps.items() if len(I) % 2 == p})
            if not part.is_zero():
                parts.append((p, part))
        return parts

    def even_part(self) -> "SuperFun":
        return SuperFun(self.dims, {I: c for I, c in self.comps.items() if len(I) % 2 == 0})

    def odd_part(self) -> "SuperFun":
        return SuperFun(self.dims, {I: c for I, c in self.comps.items() if len(I) % 2 == 1})

    def component(self, I: Iterable[int] = ()) -> RadialCoeff:
        return self.comps.get(tuple(I), RadialCoeff.zero(self.dims.m))

    def body(self) -> RadialCoeff:
        return self.component(())

    def top(self) -> RadialCoeff:
        return self.component(self.dims.top)

    def soul(self) -> "SuperFun":
        return SuperFun(self.dims, {I: c for I, c in self.comps.items() if I})

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.comps.values())

    def max_degree(self) -> int:
        return max((sum(a) for c in self.comps.values() for _, a, _, _ in c.iter_terms()), default=0)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "SuperFun":
        if isinstance(other, SuperFun):
            if other.dims != self.dims:
                raise ValueError(f"dimension mismatch: {self.dims} vs {other.dims}")
            return other
        if isinstance(other, (int, Fraction)):
            return SuperFun.const(self.dims, other)
        if isinstance(other, RadialCoeff):
            return SuperFun(self.dims, {(): other})
        raise TypeError(f"cannot combine SuperFun with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        comps = dict(self.comps)
        for I, c in other.comps.items():
            comps[I] = comps[I] + c if I in comps else c
        return SuperFun(self.dims, comps)

    __radd__ = __add__

    def __neg__(self):
        return SuperFun(self.dims, {I: -c for I, c in self.comps.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperFun(self.dims, {I: c * other for I, c in self.comps.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        comps: dict[MultiIndex, RadialCoeff] = {}
        for I, a in self.comps.items():
            for J, b in other.comps.items():
                sign, K = merge(I, J)
                if not sign:
                    continue
                term = a * b if sign > 0 else -(a * b)
                comps[K] = comps[K] + term if K in comps else term
        return SuperFun(self.dims, comps)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int) -> "SuperFun":
        if k < 0:
            return self.inverse() ** (-k)
        out = SuperFun.const(self.dims, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def map_coeffs(self, fn) -> "SuperFun":
        return SuperFun(self.dims, {I: fn(c) for I, c in self.comps.items()})

    # derivatives ------------------------------------------------------

    def derive_x(self, i: int) -> "SuperFun":
        return self.map_coeffs(lambda c: c.derive(i))

    def theta_derive(self, j: int) -> "SuperFun":
        """Left derivative along theta^j."""
        if not 1 <= j <= self.dims.odd:
            raise IndexError(f"odd index {j} out of range 1..{self.dims.odd}")
        comps = {}
        for I, c in self.comps.items():
            if j not in I:
                continue
            before = sum(1 for i in I if i < j)
            comps[tuple(i for i in I if i != j)] = -c if before % 2 else c
        return SuperFun(self.dims, comps)

    def derive(self, k: int) -> "SuperFun":
        """Derivative along coordinate k of all m+2n coordinates."""
        if self.dims.parity(k) == 0:
            return self.derive_x(k)
        return self.theta_derive(k - self.dims.m)

    # inverses and powers ----------------------------------------------

    def inverse(self) -> "SuperFun":
        if self.parity() != 0:
            raise ValueError("only even superfunctions are inverted")
        return taylor_compose(("pow", Fraction(-1)), self.body(), self.soul())

    def __str__(self) -> str:
        return render_superfun(self)

    def __repr__(self) -> str:
        return f"SuperFun[{self.dims}]({self})"


def sf_mul(f: SuperFun, g: SuperFun) -> SuperFun:
    return f * g


def theta_derive(f: SuperFun, j: int) -> SuperFun:
    return f.theta_derive(j)


def berezin_theta(f: SuperFun) -> RadialCoeff:
    """Berezin integral over all odd variables, sign convention (-1)^(n(2n-1))."""
    top = f.top()
    return top if berezin_sign(f.dims.n) > 0 else -top


def _falling(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out


def _log_radial(base: RadialCoeff) -> RadialCoeff:
    if len(base.terms) == 1 and not base.has_denominator():
        (e, k), P = next(iter(base.terms.items()))
        P, e = _strip_s(P, e, poly_ring(base.m)[2])
        if k == 0 and P == 1:
            return RadialCoeff.log_r(base.m) * e
    raise ValueError(f"log is only available for pure radial powers, not {base}")


def taylor_compose(g, base: RadialCoeff, nil: SuperFun) -> SuperFun:
    """Evaluate ``g(base + nil)`` by the finite Taylor series in the nilpotent part.

    ``g`` is ``("pow", a)`` for y -> y^a or ``"log"``.
    """
    if any(len(I) % 2 or not I for I in nil.comps):
        raise ValueError("nilpotent argument must be even with no body")
    dims = nil.dims
    n_terms = dims.n
    if g == "log":
        derivs = [SuperFun(dims, {(): _log_radial(base)})]
        if n_terms and not nil.is_zero():
            inv = base.inverse()
            for k in range(1, n_terms + 1):
                c = Fraction((-1) ** (k - 1) * math.factorial(k - 1))
                derivs.append(SuperFun(dims, {(): (inv ** k) * c}))
    else:
        kind, a = g
        if kind != "pow":
            raise ValueError(f"unknown function {g!r}")
        a = Fraction(a)
        head = base ** a
        derivs = [SuperFun(dims, {(): head})]
        if n_terms and not nil.is_zero():
            inv = base.inverse()
            for k in range(1, n_terms + 1):
                derivs.append(SuperFun(dims, {(): head * (inv ** k) * _falling(a, k)}))
    out = derivs[0]
    power = SuperFun.const(dims, 1)
    for k in range(1, len(derivs)):
        power = power * nil
        if power.is_zero():
            break
        out = out + derivs[k] * power * Fraction(1, math.factorial(k))
    return out


def sqrt_even(f: SuperFun) -> SuperFun:
    """Positive square root of an even superfunction with positive body."""
    if f.parity() != 0:
        raise ValueError("sqrt_even needs an even superfunction")
    body = f.body()
    if body.is_zero() or body.sign() <= 0:
        raise ValueError("sqrt_even needs a positive body")
    return taylor_compose(("pow", Fraction(1, 2)), body, f.soul())


def theta_sq(dims: SpaceDims) -> SuperFun:
    """vartheta^2 = -sum_(j odd) theta^j theta^(j+1)."""
    out = SuperFun.zero(dims)
    for j in range(1, dims.odd, 2):
        out = out - SuperFun.coeff(dims, RadialCoeff.const(dims.m, 1), (j, j + 1))
    return out


def superradius_sq(dims: SpaceDims) -> SuperFun:
    """R^2 = r^2 + vartheta^2."""
    return SuperFun.r_pow(dims, 2) + theta_sq(dims)


def superpower_R(dims: SpaceDims, a) -> SuperFun:
    """R^a for rational a, or log R when ``a == "log"``."""
    r2 = RadialCoeff.r_pow(dims.m, 2)
    nil = theta_sq(dims)
    if a == "log":
        return taylor_compose("log", r2, nil) * Fraction(1, 2)
    return taylor_compose(("pow", Fraction(a) / 2), r2, nil)


def render_superfun(f: SuperFun) -> str:
    parts = []
    for I in sorted(f.comps, key=lambda I: (len(I), I)):
        c = f.comps[I]
        thetas = [f"th{j}" for j in I]
        if c.has_denominator():
            parts.append("*".join([render_radial(c)] + thetas))
            continue
        for coef, alpha, e, k in c.iter_terms():
            parts.append(render_monomial(coef, alpha, e, k, thetas))
    return join_signed(parts)
