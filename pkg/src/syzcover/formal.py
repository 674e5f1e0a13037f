"""Polynomials in matrix indeterminates with localized curve coefficients.

These carry the presentations of the cover's chart algebras: variables are
the entries of a 2x2 matrix of indeterminates, coefficients live in the
monomial localization of the curve ring.  Coefficients are not canonical
(fractions compare by cross multiplication), so equality compares
coefficients pairwise rather than by dictionary identity.
"""

from __future__ import annotations

from .curve import CurveContext, CurvePolynomial, LocalFraction


class FormalPolynomial:
    __slots__ = ("ctx", "vars", "terms")

    def __init__(self, ctx: CurveContext, variables: tuple[str, ...], terms: dict):
        self.ctx = ctx
        self.vars = tuple(variables)
        cleaned = {}
        for exps, coeff in terms.items():
            coeff = self._as_fraction(ctx, coeff)
            if not coeff.is_zero():
                cleaned[tuple(exps)] = coeff
        self.terms = cleaned

    @staticmethod
    def _as_fraction(ctx, value):
        if isinstance(value, LocalFraction):
            return value
        if isinstance(value, (int, CurvePolynomial)):
            return ctx.fraction(value)
        raise TypeError(f"cannot use {type(value).__name__} as a coefficient")

    @classmethod
    def zero(cls, ctx, variables):
        return cls(ctx, variables, {})

    @classmethod
    def constant(cls, ctx, variables, value):
        return cls(ctx, variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, ctx, variables, name, coeff=1):
        exps = [0] * len(variables)
        exps[list(variables).index(name)] = 1
        return cls(ctx, variables, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, FormalPolynomial):
            if other.ctx != self.ctx or other.vars != self.vars:
                raise ValueError("formal polynomials over different rings")
            return other
        if isinstance(other, (int, CurvePolynomial, LocalFraction)):
            return FormalPolynomial.constant(self.ctx, self.vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return FormalPolynomial(self.ctx, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return FormalPolynomial(
            self.ctx, self.vars, {e: -c for e, c in self.terms.items()}
        )

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return FormalPolynomial(self.ctx, self.vars, out)

    __rmul__ = __mul__

    def scale(self, coeff) -> FormalPolynomial:
        coeff = self._as_fraction(self.ctx, coeff)
        return FormalPolynomial(
            self.ctx, self.vars, {e: coeff * c for e, c in self.terms.items()}
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = FormalPolynomial.constant(self.ctx, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def p_power(self) -> FormalPolynomial:
        """Entrywise Frobenius: valid termwise in characteristic p."""
        p = self.ctx.p
        return FormalPolynomial(
            self.ctx,
            self.vars,
            {tuple(x * p for x in e): c.p_power() for e, c in self.terms.items()},
        )

    def substitute(self, mapping: dict) -> FormalPolynomial:
        """Replace each variable by a formal polynomial (all from one target ring)."""
        images = [mapping[name] for name in self.vars]
        target = images[0]
        result = FormalPolynomial.zero(target.ctx, target.vars)
        for exps, coeff in self.terms.items():
            term = FormalPolynomial.constant(target.ctx, target.vars, coeff)
            for img, e in zip(images, exps):
                if e:
                    term = term * (img ** e)
            result = result + term
        return result

    def formal_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def coefficient(self, exps) -> LocalFraction:
        return self.terms.get(tuple(exps), self.ctx.fraction(0))

    def evaluate(self, assignment: dict, point):
        """Value at a curve point with field values assigned to the variables."""
        values = [assignment[name] for name in self.vars]
        field = values[0].field
        acc = field.zero
        for exps, coeff in self.terms.items():
            val = coeff.evaluate(point)
            for v, e in zip(values, exps):
                if e:
                    val = val * (v ** e)
            acc = acc + val
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        for e in set(self.terms) | set(other.terms):
            mine = self.terms.get(e)
            theirs = other.terms.get(e)
            if mine is None or theirs is None:
                return False  # stored coefficients are never zero
            if mine != theirs:
                return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            cs = str(coeff)
            if not mono:
                parts.append(f"({cs})" if ("+" in cs or "/" in cs) else cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append((f"({cs})" if ("+" in cs or "/" in cs or "*" in cs) else cs) + "*" + mono)
        return " + ".join(parts)

    __repr__ = __str__
