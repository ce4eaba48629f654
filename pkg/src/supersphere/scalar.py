"""Exact scalars: rationals, values in Q * pi^(j/2) * L^q, and radial coefficients.

Radial coefficients are finite sums ``c * x^alpha * r^e * (log r)^k`` over a
polynomial denominator in the even coordinates ``x^1 .. x^m``.  They are
kept in a canonical form so that equality is decidable exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

from sympy import QQ
from sympy.polys.rings import ring

Number = Union[int, Fraction]


def to_fraction(q) -> Fraction:
    """Convert int, Fraction or a gmpy/sympy rational to Fraction."""
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    return Fraction(int(q.numerator), int(q.denominator))


def _qq(c: Number):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# Exact values
# ---------------------------------------------------------------------------


def _power(base: str, p: Fraction) -> str:
    if p.denominator == 1 and p > 0:
        return f"{base}^{p.numerator}"
    return f"{base}^({_frac_str(p)})"


@dataclass(frozen=True)
class ExactValue:
    """A monomial ``coeff * pi^(pi_pow_x2/2) * L^L_pow``."""

    coeff: Fraction
    pi_pow_x2: int = 0
    L_pow: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "L_pow", Fraction(self.L_pow))
        if self.coeff == 0:
            object.__setattr__(self, "pi_pow_x2", 0)
            object.__setattr__(self, "L_pow", Fraction(0))

    @property
    def key(self) -> tuple[int, Fraction]:
        return (self.pi_pow_x2, self.L_pow)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactValue(self.coeff * other, self.pi_pow_x2, self.L_pow)
        if isinstance(other, ExactValue):
            return ExactValue(self.coeff * other.coeff, self.pi_pow_x2 + other.pi_pow_x2,
                              self.L_pow + other.L_pow)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactValue(self.coeff / other, self.pi_pow_x2, self.L_pow)
        if isinstance(other, ExactValue):
            if other.is_zero():
                raise ZeroDivisionError("division by exact zero")
            return ExactValue(self.coeff / other.coeff, self.pi_pow_x2 - other.pi_pow_x2,
                              self.L_pow - other.L_pow)
        return NotImplemented

    def __neg__(self):
        return ExactValue(-self.coeff, self.pi_pow_x2, self.L_pow)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, ExactValue):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.key != other.key:
            raise ValueError(f"cannot add {self} and {other}: different pi/L powers")
        return ExactValue(self.coeff + other.coeff, self.pi_pow_x2, self.L_pow)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def at(self, L: Number) -> "ExactValue":
        """Substitute a rational radius; only integer L-powers stay exact."""
        if self.L_pow.denominator != 1:
            raise ValueError("cannot substitute L into a fractional L-power exactly")
        return ExactValue(self.coeff * Fraction(L) ** int(self.L_pow), self.pi_pow_x2)

    def to_json(self) -> dict:
        return {"coeff": _frac_str(self.coeff), "pi_pow_x2": self.pi_pow_x2,
                "L_pow": _frac_str(self.L_pow)}

    @classmethod
    def from_json(cls, obj: dict) -> "ExactValue":
        return cls(Fraction(obj["coeff"]), int(obj["pi_pow_x2"]), Fraction(obj["L_pow"]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        factors = []
        if self.pi_pow_x2:
            if self.pi_pow_x2 == 2:
                factors.append("pi")
            elif self.pi_pow_x2 % 2 == 0:
                factors.append(_power("pi", Fraction(self.pi_pow_x2 // 2)))
            else:
                factors.append(f"pi^({self.pi_pow_x2}/2)")
        if self.L_pow:
            if self.L_pow == 1:
                factors.append("L")
            else:
                factors.append(_power("L", self.L_pow))
        c = self.coeff
        if not factors:
            return _frac_str(c)
        if c == 1:
            return " * ".join(factors)
        if c == -1:
            return "-" + " * ".join(factors)
        return " * ".join([_frac_str(c)] + factors)


class ExactSum:
    """Finite sum of :class:`ExactValue` monomials, i.e. a Laurent/Puiseux polynomial in L.

    Integrals of general superfunctions land here since different pieces
    carry different powers of L.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[ExactValue] = ()):
        acc: dict[tuple[int, Fraction], Fraction] = {}
        for t in terms:
            if t.is_zero():
                continue
            acc[t.key] = acc.get(t.key, Fraction(0)) + t.coeff
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def of(cls, value) -> "ExactSum":
        if isinstance(value, ExactSum):
            return value
        if isinstance(value, ExactValue):
            return cls([value])
        if isinstance(value, (int, Fraction)):
            return cls([ExactValue(Fraction(value))])
        raise TypeError(f"not an exact value: {value!r}")

    def terms(self) -> list[ExactValue]:
        keys = sorted(self._terms, key=lambda k: (k[1], k[0]), reverse=True)
        return [ExactValue(self._terms[k], k[0], k[1]) for k in keys]

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) <= 1

    def as_value(self) -> ExactValue:
        if len(self._terms) > 1:
            raise ValueError(f"{self} is not a single monomial")
        ts = self.terms()
        return ts[0] if ts else ExactValue(Fraction(0))

    def __add__(self, other):
        try:
            other = ExactSum.of(other)
        except TypeError:
            return NotImplemented
        return ExactSum(self.terms() + other.terms())

    __radd__ = __add__

    def __neg__(self):
        return ExactSum([-t for t in self.terms()])

    def __sub__(self, other):
        return self + (-ExactSum.of(other))

    def __rsub__(self, other):
        return ExactSum.of(other) - self

    def __mul__(self, other):
        try:
            other = ExactSum.of(other)
        except TypeError:
            return NotImplemented
        return ExactSum(a * b for a in self.terms() for b in other.terms())

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = ExactSum.of(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def d_dL(self) -> "ExactSum":
        return ExactSum(ExactValue(t.coeff * t.L_pow, t.pi_pow_x2, t.L_pow - 1)
                        for t in self.terms())

    def integrate_L(self) -> "ExactSum":
        """Formal antiderivative from 0: L^p -> L^(p+1)/(p+1).

        Negative powers are continued analytically (finite part); a 1/L term
        has no such value and raises.
        """
        out = []
        for t in self.terms():
            if t.L_pow == -1:
                raise ValueError("radial integral of 1/L diverges logarithmically")
            out.append(ExactValue(t.coeff / (t.L_pow + 1), t.pi_pow_x2, t.L_pow + 1))
        return ExactSum(out)

    def at(self, L: Number) -> "ExactSum":
        return ExactSum(t.at(L) for t in self.terms())

    def to_json(self):
        ts = self.terms()
        if len(ts) <= 1:
            return (ts[0] if ts else ExactValue(Fraction(0))).to_json()
        return [t.to_json() for t in ts]

    @classmethod
    def from_json(cls, obj) -> "ExactSum":
        if isinstance(obj, list):
            return cls(ExactValue.from_json(o) for o in obj)
        return cls([ExactValue.from_json(obj)])

    def __str__(self) -> str:
        ts = self.terms()
        if not ts:
            return "0"
        out = str(ts[0])
        for t in ts[1:]:
            s = str(t)
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self) -> str:
        return f"ExactSum({self})"


def gamma_half(a: Number) -> ExactValue:
    """Gamma function at a positive integer or half-integer."""
    a = Fraction(a)
    if (2 * a).denominator != 1 or a <= 0:
        raise ValueError(f"gamma_half needs a positive half-integer, got {a}")
    if a.denominator == 1:
        return ExactValue(Fraction(math.factorial(int(a) - 1)))
    k = int(a - Fraction(1, 2))
    return ExactValue(Fraction(math.factorial(2 * k), 4 ** k * math.factorial(k)), 1)


def gamma_half_continued(a: Number) -> ExactValue:
    """Gamma at any half-integer off the poles, via Gamma(a) = Gamma(a+1)/a."""
    a = Fraction(a)
    if a > 0:
        return gamma_half(a)
    if a.denominator == 1:
        raise ValueError(f"Gamma has a pole at {a}")
    return gamma_half_continued(a + 1) / a


def sphere_monomial_integral(alpha: Iterable[int], m: int) -> ExactValue:
    """Integral of omega^alpha over the unit sphere S^(m-1) in R^m."""
    alpha = tuple(alpha)
    if m < 1 or len(alpha) != m:
        raise ValueError("alpha must have exactly m >= 1 entries")
    if any(a % 2 for a in alpha):
        return ExactValue(Fraction(0))
    num = ExactValue(Fraction(2))
    for a in alpha:
        num = num * gamma_half(Fraction(a + 1, 2))
    return num / gamma_half(Fraction(sum(alpha) + m, 2))


# ---------------------------------------------------------------------------
# Radial coefficients
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def poly_ring(m: int):
    """Polynomial ring Q[x1..xm] together with its generators and sum of squares."""
    names = ",".join(f"x{i}" for i in range(1, m + 1))
    R, *gens = ring(names, QQ)
    s = R.zero
    for g in gens:
        s += g ** 2
    return R, tuple(gens), s


def _strip_s(P, e: Fraction, s):
    """Move every factor of s out of P into the radial exponent."""
    if not P:
        return P, e
    while True:
        q, rem = P.div(s)
        if rem:
            return P, e
        P, e = q, e + 2


def _exact_root(P, q: int):
    """Exact q-th root of a polynomial, or None."""
    if not P:
        return P
    c, facs = P.factor_list()
    if any(k % q for _, k in facs):
        return None
    c = to_fraction(c)
    if c < 0 and q % 2 == 0:
        return None
    sign = -1 if c < 0 else 1
    num = _int_root(abs(c.numerator), q)
    den = _int_root(c.denominator, q)
    if num is None or den is None:
        return None
    root = P.ring(_qq(Fraction(sign * num, den)))
    for f, k in facs:
        root *= f ** (k // q)
    return root


def _int_root(a: int, q: int):
    r = round(a ** (1.0 / q)) if a else 0
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** q == a:
            return cand
    return None


def _sample_points(m: int):
    yield (0.0,) * m
    yield (0.37,) * m
    yield tuple(0.3 + 0.17 * i for i in range(m))
    yield tuple(-0.61 + 0.29 * i for i in range(m))


class RadialCoeff:
    """Element of the coefficient ring: ``sum_(e,k) P_(e,k) r^e (log r)^k / Q``.

    ``terms`` maps ``(e, k)`` to a nonzero polynomial; there is at most one
    exponent per residue class of e mod 2 and log power k.  Non-even
    classes and negative even exponents carry polynomials free of
    ``sum x_i^2``; nonnegative even exponents are expanded into plain
    polynomials with e = 0.  The denominator ``den`` is free of
    ``sum x_i^2``, coprime to the numerator and has leading coefficient 1.
    """

    __slots__ = ("m", "terms", "den")

    def __init__(self, m: int, terms: dict, den):
        self.m = m
        self.terms = terms
        self.den = den

    # construction -----------------------------------------------------

    @classmethod
    def canonical(cls, m: int, raw: Iterable[tuple], den=None) -> "RadialCoeff":
        """Bring ``[(e, k, P), ...] / den`` into canonical form."""
        R, gens, s = poly_ring(m)
        if den is None:
            den = R.one
        if not den:
            raise ZeroDivisionError("zero denominator")
        shift = Fraction(0)
        if not den.is_ground:
            den, shift = _strip_s(den, Fraction(0), s)
        groups: dict[tuple[Fraction, int], list] = {}
        for e, k, P in raw:
            if not P:
                continue
            e = Fraction(e) - shift
            groups.setdefault((e % 2, k), []).append((e, P))
        classes = []
        for (_, k), items in groups.items():
            emin = min(e for e, _ in items)
            P = R.zero
            for e, Q in items:
                j = int((e - emin) / 2)
                P += Q * s ** j if j else Q
            if not P:
                continue
            P, emin = _strip_s(P, emin, s)
            classes.append([emin, k, P])
        if not classes:
            return cls(m, {}, R.one)
        if not den.is_ground:
            g = den
            for c in classes:
                g = g.gcd(c[2])
                if g.is_ground:
                    break
            if not g.is_ground:
                den = den.exquo(g)
                for c in classes:
                    c[2] = c[2].exquo(g)
        lc = den.LC
        if lc != 1:
            den = den.quo_ground(lc)
            for c in classes:
                c[2] = c[2].quo_ground(lc)
        terms = {}
        for e, k, P in classes:
            if e.denominator == 1 and e >= 0 and e % 2 == 0:
                if e:
                    P = P * s ** int(e / 2)
                e = Fraction(0)
            terms[(e, k)] = P
        return cls(m, terms, den)

    @classmethod
    def zero(cls, m: int) -> "RadialCoeff":
        return cls(m, {}, poly_ring(m)[0].one)

    @classmethod
    def const(cls, m: int, c: Number) -> "RadialCoeff":
        R = poly_ring(m)[0]
        if c == 0:
            return cls.zero(m)
        return cls(m, {(Fraction(0), 0): R(_qq(c))}, R.one)

    @classmethod
    def from_poly(cls, m: int, P, den=None) -> "RadialCoeff":
        return cls.canonical(m, [(Fraction(0), 0, P)], den)

    @classmethod
    def monomial(cls, m: int, c: Number = 1, alpha=None, e: Number = 0, k: int = 0) -> "RadialCoeff":
        """The single term ``c * x^alpha * r^e * (log r)^k``."""
        R = poly_ring(m)[0]
        alpha = tuple(alpha) if alpha is not None else (0,) * m
        if len(alpha) != m:
            raise ValueError("multi-index length must equal m")
        P = R.from_dict({alpha: _qq(c)}) if c else R.zero
        return cls.canonical(m, [(Fraction(e), k, P)])

    @classmethod
    def x(cls, m: int, i: int) -> "RadialCoeff":
        if not 1 <= i <= m:
            raise IndexError(f"axis {i} out of range 1..{m}")
        alpha = [0] * m
        alpha[i - 1] = 1
        return cls.monomial(m, 1, alpha)

    @classmethod
    def r_pow(cls, m: int, e: Number) -> "RadialCoeff":
        return cls.monomial(m, 1, None, e)

    @classmethod
    def log_r(cls, m: int) -> "RadialCoeff":
        return cls.monomial(m, 1, None, 0, 1)

    # queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return self.den == 1 and all(key == (0, 0) for key in self.terms)

    def as_poly(self):
        """The polynomial this coefficient equals (raises unless polynomial)."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.terms.get((Fraction(0), 0), poly_ring(self.m)[0].zero)

    def has_denominator(self) -> bool:
        return self.den != 1

    def iter_terms(self) -> Iterator[tuple[Fraction, tuple[int, ...], Fraction, int]]:
        """Yield ``(c, alpha, e, k)`` for the numerator terms."""
        for (e, k), P in sorted(self.terms.items()):
            for alpha, c in sorted(P.terms(), reverse=True):
                yield to_fraction(c), alpha, e, k

    def at_origin(self) -> Fraction:
        """Value at x = 0; only for coefficients regular there without r."""
        if any(key != (0, 0) for key in self.terms):
            raise ValueError(f"{self} involves r and has no plain value at the origin")
        P = self.terms.get((Fraction(0), 0))
        num = Fraction(0) if P is None else to_fraction(P.coeff(1))
        den = to_fraction(self.den.coeff(1))
        if den == 0:
            raise ZeroDivisionError(f"{self} is singular at the origin")
        return num / den

    def evaluate(self, point) -> float:
        """Floating-point value at a point; used only to fix signs of roots."""
        r = math.sqrt(sum(float(v) ** 2 for v in point))
        pt = [float(v) for v in point]

        def ev(P):
            return sum(float(to_fraction(c)) * math.prod(v ** a for v, a in zip(pt, alpha))
                       for alpha, c in P.terms())

        total = 0.0
        for (e, k), P in self.terms.items():
            total += ev(P) * r ** float(e) * math.log(r) ** k
        return total / ev(self.den)

    def sign(self) -> int:
        for pt in _sample_points(self.m):
            try:
                v = self.evaluate(pt)
            except (ZeroDivisionError, ValueError):
                continue
            if v > 0:
                return 1
            if v < 0:
                return -1
        raise ValueError(f"cannot determine sign of {self}")

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "RadialCoeff":
        if isinstance(other, RadialCoeff):
            if other.m != self.m:
                raise ValueError("dimension mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return RadialCoeff.const(self.m, other)
        raise TypeError(f"cannot combine RadialCoeff with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.den == other.den:
            raw = [(e, k, P) for (e, k), P in self.terms.items()]
            raw += [(e, k, P) for (e, k), P in other.terms.items()]
            return RadialCoeff.canonical(self.m, raw, self.den)
        lcm = self.den.lcm(other.den)
        fa, fb = lcm.exquo(self.den), lcm.exquo(other.den)
        raw = [(e, k, P * fa) for (e, k), P in self.terms.items()]
        raw += [(e, k, P * fb) for (e, k), P in other.terms.items()]
        return RadialCoeff.canonical(self.m, raw, lcm)

    __radd__ = __add__

    def __neg__(self):
        return RadialCoeff(self.m, {key: -P for key, P in self.terms.items()}, self.den)

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
            if other == 0:
                return RadialCoeff.zero(self.m)
            c = _qq(other)
            return RadialCoeff(self.m, {key: P * c for key, P in self.terms.items()}, self.den)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return RadialCoeff.zero(self.m)
        raw = [(e1 + e2, k1 + k2, P1 * P2)
               for (e1, k1), P1 in self.terms.items()
               for (e2, k2), P2 in other.terms.items()]
        return RadialCoeff.canonical(self.m, raw, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def inverse(self) -> "RadialCoeff":
        """Multiplicative inverse; needs a single numerator class without logs."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in the coefficient ring")
        (e, k), P = next(iter(self.terms.items()))
        if k:
            raise ZeroDivisionError("log terms are not invertible")
        return RadialCoeff.canonical(self.m, [(-e, 0, self.den)], P)

    def __pow__(self, a) -> "RadialCoeff":
        a = Fraction(a)
        if a.denominator == 1:
            n = int(a)
            base = self if n >= 0 else self.inverse()
            result = RadialCoeff.const(self.m, 1)
            for _ in range(abs(n)):
                result = result * base
            return result
        return self.root(a.denominator) ** a.numerator

    def root(self, q: int) -> "RadialCoeff":
        """Exact q-th root (positive branch for even q); raises if none exists."""
        if len(self.terms) != 1:
            raise ValueError(f"no exact root of {self}")
        (e, k), P = next(iter(self.terms.items()))
        if k:
            raise ValueError("no exact root of a log term")
        P, e = _strip_s(P, e, poly_ring(self.m)[2])
        num, den = _exact_root(P, q), _exact_root(self.den, q)
        if num is None or den is None:
            raise ValueError(f"{self} has no exact {q}-th root")
        out = RadialCoeff.canonical(self.m, [(e / q, 0, num)], den)
        if q % 2 == 0 and out.sign() < 0:
            out = -out
        return out

    def derive(self, i: int) -> "RadialCoeff":
        """Partial derivative along x^i, using d r / d x^i = x^i / r."""
        if not 1 <= i <= self.m:
            raise IndexError(f"axis {i} out of range 1..{self.m}")
        R, gens, _ = poly_ring(self.m)
        xi = gens[i - 1]
        raw = []
        for (e, k), P in self.terms.items():
            raw.append((e, k, P.diff(xi)))
            if e:
                raw.append((e - 2, k, P * xi * _qq(e)))
            if k:
                raw.append((e - 2, k - 1, P * xi * k))
        if self.den.is_ground:
            return RadialCoeff.canonical(self.m, raw, self.den)
        dq = self.den.diff(xi)
        raw = [(e, k, P * self.den) for e, k, P in raw]
        raw += [(e, k, -P * dq) for (e, k), P in self.terms.items()]
        return RadialCoeff.canonical(self.m, raw, self.den ** 2)

    def __str__(self) -> str:
        return render_radial(self)

    def __repr__(self) -> str:
        return f"RadialCoeff({self})"


def radial_canonicalize(m: int, terms: Iterable[tuple]) -> RadialCoeff:
    """Canonical form of ``sum c x^alpha r^e (log r)^k`` given as ``(c, alpha, e, k)``."""
    R = poly_ring(m)[0]
    raw = [(Fraction(e), k, R.from_dict({tuple(alpha): _qq(c)})) for c, alpha, e, k in terms if c]
    return RadialCoeff.canonical(m, raw)


def radial_derive(c: RadialCoeff, i: int) -> RadialCoeff:
    return c.derive(i)


def _render_factor(name: str, power) -> str:
    if power == 1:
        return name
    p = Fraction(power)
    if p.denominator == 1 and p >= 0:
        return f"{name}^{p.numerator}"
    return f"{name}^({_frac_str(p)})"


def render_monomial(c: Fraction, alpha, e: Fraction, k: int, extra: list[str] = ()) -> str:
    """Render one term in the CLI grammar; the sign is kept on the coefficient."""
    factors = [_render_factor(f"x{i + 1}", a) for i, a in enumerate(alpha) if a]
    if e:
        factors.append(_render_factor("r", e))
    if k:
        factors.append(_render_factor("log(r)", k))
    factors += list(extra)
    if not factors:
        return _frac_str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return "*".join([_frac_str(c)] + factors)


def join_signed(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def render_radial(c: RadialCoeff) -> str:
    num = join_signed([render_monomial(*t) for t in c.iter_terms()])
    if c.den == 1:
        return num
    den = RadialCoeff(c.m, {(Fraction(0), 0): c.den}, poly_ring(c.m)[0].one)
    return f"({num})/({render_radial(den)})"
