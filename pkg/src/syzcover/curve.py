"""Exact arithmetic on Fermat-type plane curves and monomial localizations.

The coordinate ring k[u, v, w] / (u^e + v^e - w^e) over F_p is represented
in the normal form obtained by eliminating powers w^k with k >= e through
the defining equation, i.e. on the monomial basis {u^i v^j w^k : k < e}.
Fractions carry denominators u^a w^b only (the charts that ever get
localized) and compare by cross multiplication, which is valid because
u and w are nonzerodivisors in the (integral) coordinate ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import GF, FieldElement, FieldTooLargeError, is_prime


@dataclass(frozen=True)
class CurveContext:
    """A curve u^e + v^e = w^e over F_p, with display names for the variables."""

    p: int
    exponent: int
    names: tuple[str, str, str] = ("u", "v", "w")

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 3:
            raise ValueError(f"characteristic must be an odd prime, got {self.p}")
        if self.exponent < 2:
            raise ValueError("curve degree must be at least 2")

    @property
    def d(self) -> int:
        return (self.p + 1) // 2

    def zero(self) -> CurvePolynomial:
        return CurvePolynomial(self, {})

    def one(self) -> CurvePolynomial:
        return CurvePolynomial(self, {(0, 0, 0): 1})

    def const(self, c: int) -> CurvePolynomial:
        return self.monomial(c, (0, 0, 0))

    def monomial(self, c: int, exps) -> CurvePolynomial:
        return CurvePolynomial(self, {tuple(exps): c % self.p})

    def variables(self) -> tuple[CurvePolynomial, CurvePolynomial, CurvePolynomial]:
        return (
            self.monomial(1, (1, 0, 0)),
            self.monomial(1, (0, 1, 0)),
            self.monomial(1, (0, 0, 1)),
        )

    def fraction(self, num, du: int = 0, dw: int = 0) -> LocalFraction:
        if isinstance(num, int):
            num = self.const(num)
        return LocalFraction(self, num, du, dw)


def fermat_curve(p: int, exponent: int | None = None, names=("u", "v", "w")) -> CurveContext:
    """The Fermat curve of the given degree (defaults to p + 1)."""
    return CurveContext(p, p + 1 if exponent is None else exponent, tuple(names))


class CurvePolynomial:
    """Sparse normal-form element of the curve's coordinate ring.

    Terms map exponent triples (i, j, k) with k < e to coefficients in
    [1, p).  Equality is representation equality, which is decisive because
    the normal form is canonical on the basis {u^i v^j w^k : k < e}.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: CurveContext, terms: dict):
        self.ctx = ctx
        self.terms = _normalize(ctx, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, CurvePolynomial):
            if other.ctx != self.ctx:
                raise ValueError("polynomials from different curve contexts")
            return other
        if isinstance(other, int):
            return self.ctx.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            new = (out.get(e, 0) + c) % p
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        return _raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return _raw(self.ctx, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        out = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return CurvePolynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def p_power(self) -> CurvePolynomial:
        """f**p computed termwise; valid since coefficients sit in F_p."""
        p = self.ctx.p
        return CurvePolynomial(
            self.ctx, {(i * p, j * p, k * p): c for (i, j, k), c in self.terms.items()}
        )

    def degree(self) -> int:
        """Total degree (of the normal form); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j + k for (i, j, k) in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if inhomogeneous."""
        degs = {i + j + k for (i, j, k) in self.terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else -1

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def substitute_squares(self, target: CurveContext) -> CurvePolynomial:
        """Image under the cover map doubling every exponent.

        Sends each variable to the square of the corresponding variable of
        the target context (used to pass from the degree-d curve to the
        degree-2d curve).
        """
        return CurvePolynomial(
            target, {(2 * i, 2 * j, 2 * k): c for (i, j, k), c in self.terms.items()}
        )

    def evaluate(self, point) -> FieldElement:
        u0, v0, w0 = point
        field = u0.field
        if field.p != self.ctx.p:
            raise ValueError("evaluation field has wrong characteristic")
        if not on_curve(self.ctx, point):
            raise ValueError("point does not lie on the curve")
        acc = field.zero
        for (i, j, k), c in self.terms.items():
            acc = acc + field(c) * (u0 ** i) * (v0 ** j) * (w0 ** k)
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.const(other)
        return (
            isinstance(other, CurvePolynomial)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        nu, nv, nw = self.ctx.names
        parts = []
        for (i, j, k) in sorted(
            self.terms, key=lambda e: (-(e[0] + e[1] + e[2]), (-e[0], -e[1], -e[2]))
        ):
            c = self.terms[(i, j, k)]
            factors = []
            for name, exp in ((nu, i), (nv, j), (nw, k)):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


def _raw(ctx, terms):
    # terms already in normal form with no zero coefficients
    poly = CurvePolynomial.__new__(CurvePolynomial)
    poly.ctx = ctx
    poly.terms = terms
    return poly


def _normalize(ctx, terms):
    """Rewrite w^(e*q + r) as (u^e + v^e)^q w^r and drop zero coefficients."""
    p, e = ctx.p, ctx.exponent
    out = {}
    for (i, j, k), c in terms.items():
        c %= p
        if not c:
            continue
        if k < e:
            key = (i, j, k)
            new = (out.get(key, 0) + c) % p
            if new:
                out[key] = new
            else:
                del out[key]
            continue
        q, r = divmod(k, e)
        for t in range(q + 1):
            coeff = (c * math.comb(q, t)) % p
            if not coeff:
                continue
            key = (i + e * t, j + e * (q - t), r)
            new = (out.get(key, 0) + coeff) % p
            if new:
                out[key] = new
            else:
                del out[key]
    return out


class LocalFraction:
    """A curve polynomial divided by a monomial u^du * w^dw.

    Reduced on construction: shared powers of u and w are cancelled, and
    the zero fraction is 0/1.  Two fractions are equal when cross
    multiplication gives equal normal forms.
    """

    __slots__ = ("ctx", "num", "du", "dw")

    def __init__(self, ctx: CurveContext, num: CurvePolynomial, du: int = 0, dw: int = 0):
        if num.ctx != ctx:
            raise ValueError("numerator from a different context")
        if du < 0 or dw < 0:
            raise ValueError("denominator exponents must be >= 0")
        if num.is_zero():
            du = dw = 0
        elif du or dw:
            shift_u = min(du, min(i for (i, _, _) in num.terms))
            shift_w = min(dw, min(k for (_, _, k) in num.terms))
            if shift_u or shift_w:
                num = _raw(
                    ctx,
                    {(i - shift_u, j, k - shift_w): c for (i, j, k), c in num.terms.items()},
                )
                du -= shift_u
                dw -= shift_w
        self.ctx = ctx
        self.num = num
        self.du = du
        self.dw = dw

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, LocalFraction):
            if other.ctx != self.ctx:
                raise ValueError("fractions from different curve contexts")
            return other
        if isinstance(other, (int, CurvePolynomial)):
            return self.ctx.fraction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        du = max(self.du, other.du)
        dw = max(self.dw, other.dw)
        a = self.num * _monomial(self.ctx, du - self.du, dw - self.dw)
        b = other.num * _monomial(self.ctx, du - other.du, dw - other.dw)
        return LocalFraction(self.ctx, a + b, du, dw)

    __radd__ = __add__

    def __neg__(self):
        return LocalFraction(self.ctx, -self.num, self.du, self.dw)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LocalFraction(
            self.ctx, self.num * other.num, self.du + other.du, self.dw + other.dw
        )

    __rmul__ = __mul__

    def p_power(self) -> LocalFraction:
        p = self.ctx.p
        return LocalFraction(self.ctx, self.num.p_power(), self.du * p, self.dw * p)

    def mul_monomial(self, cu: int, cw: int) -> LocalFraction:
        """Multiply by u^cu * w^cw, cancelling against the denominator first.

        Plain multiplication would push w-powers into the numerator where
        the defining relation rewrites them, hiding the cancellation; this
        keeps denominator clearing exact at the exponent level.
        """
        ku, kw = min(cu, self.du), min(cw, self.dw)
        num = self.num
        if cu - ku or cw - kw:
            num = num * self.ctx.monomial(1, (cu - ku, 0, cw - kw))
        return LocalFraction(self.ctx, num, self.du - ku, self.dw - kw)

    def inverse(self) -> LocalFraction:
        """Reciprocal; defined when the numerator is a single term c*u^i*w^k."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        if len(self.num.terms) != 1:
            raise ValueError("fraction is not a unit monomial")
        ((i, j, k), c), = self.num.terms.items()
        if j:
            raise ValueError("numerator involves the middle variable; not invertible here")
        cinv = pow(c, self.ctx.p - 2, self.ctx.p)
        return LocalFraction(self.ctx, self.ctx.monomial(cinv, (self.du, 0, self.dw)), i, k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lhs = self.num * _monomial(self.ctx, other.du, other.dw)
        rhs = other.num * _monomial(self.ctx, self.du, self.dw)
        return lhs == rhs

    def evaluate(self, point) -> FieldElement:
        u0, _, w0 = point
        if (self.du and u0.is_zero()) or (self.dw and w0.is_zero()):
            raise ZeroDivisionError("denominator vanishes at this point")
        val = self.num.evaluate(point)
        if self.du:
            val = val / (u0 ** self.du)
        if self.dw:
            val = val / (w0 ** self.dw)
        return val

    def __str__(self):
        num = str(self.num)
        if self.du == 0 and self.dw == 0:
            return num
        nu, _, nw = self.ctx.names
        factors = []
        if self.du == 1:
            factors.append(nu)
        elif self.du > 1:
            factors.append(f"{nu}^{self.du}")
        if self.dw == 1:
            factors.append(nw)
        elif self.dw > 1:
            factors.append(f"{nw}^{self.dw}")
        den = "*".join(factors)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(factors) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __repr__ = __str__


def _monomial(ctx, du, dw):
    return ctx.monomial(1, (du, 0, dw))


def on_curve(ctx: CurveContext, point) -> bool:
    u0, v0, w0 = point
    e = ctx.exponent
    return (u0 ** e) + (v0 ** e) == (w0 ** e)


def curve_cone_points(ctx: CurveContext, field: GF):
    """All nonzero (u0, v0, w0) in the field cube satisfying the equation.

    Enumerated with one precomputed table of e-th powers, so the cost is
    O(|F|^2) instead of a cube scan.
    """
    if field.order ** 2 > field.scan_cap:
        raise FieldTooLargeError(
            f"cone enumeration over order-{field.order} field exceeds the cap"
        )
    e = ctx.exponent
    power_to_elems: dict = {}
    for w0 in field.elements():
        power_to_elems.setdefault((w0 ** e).coeffs, []).append(w0)
    points = []
    for u0 in field.elements():
        ue = u0 ** e
        for v0 in field.elements():
            t = ue + (v0 ** e)
            for w0 in power_to_elems.get(t.coeffs, ()):
                if not (u0.is_zero() and v0.is_zero() and w0.is_zero()):
                    points.append((u0, v0, w0))
    return points


def random_curve_points(ctx: CurveContext, field: GF, count: int, rng, units: bool = True):
    """count distinct curve points, sampled deterministically from rng.

    With units=True only points with u0 != 0 and w0 != 0 are returned, so
    every monomial denominator u^a w^b can be evaluated at them.
    """
    pool = curve_cone_points(ctx, field)
    if units:
        pool = [pt for pt in pool if not pt[0].is_zero() and not pt[2].is_zero()]
    if count > len(pool):
        raise ValueError(f"only {len(pool)} candidate points available, wanted {count}")
    return rng.sample(pool, count)
