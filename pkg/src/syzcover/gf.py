"""Exact arithmetic in finite fields GF(p^m) for odd primes p.

Elements are polynomial residues modulo a monic irreducible polynomial.
The modulus is chosen deterministically (first irreducible in a fixed
counting order), so generators, solution sets of power equations and
everything serialized from them are stable across runs and machines.

Whole-field operations (generator search, power-equation scans) refuse
fields above a configurable size cap instead of running for hours.
"""

from __future__ import annotations

import itertools
import math

DEFAULT_SCAN_CAP = 1 << 22


class FieldTooLargeError(ValueError):
    """A whole-field scan was requested on a field above the size cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    for f in itertools.chain((2,), itertools.count(3, 2)):
        if f * f > n:
            break
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
    if n > 1:
        out.append(n)
    return tuple(out)


# -- dense univariate polynomials over F_p (ascending coefficient lists) --


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, f, p):
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - df
            for i, c in enumerate(f):
                r[shift + i] = (r[shift + i] - lead * c) % p
        r.pop()
    return _trim(r)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        if b[-1] != 1:
            inv = pow(b[-1], p - 2, p)
            b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    frob = {}  # k -> x^(p^k) mod f
    t = x
    for k in range(1, m + 1):
        t = _ppowmod(t, p, f, p)
        frob[k] = t
    if _trim(list(frob[m])) != x:
        return False
    for ell in prime_factors(m):
        diff = list(frob[m // ell])
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


def _find_irreducible(p, m):
    """First monic irreducible of degree m in base-p counting order."""
    for k in itertools.count():
        digits, kk = [], k
        for _ in range(m):
            digits.append(kk % p)
            kk //= p
        if kk:
            raise RuntimeError(f"no irreducible of degree {m} over GF({p}) found")
        cand = digits + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)


class GF:
    """The finite field with p**m elements.

    Elements enumerate in a canonical order: the element with coefficients
    (a_0, ..., a_{m-1}) sits at index sum(a_i * p**i), i.e. base-p counting
    with the constant coefficient least significant.
    """

    __slots__ = (
        "p", "m", "order", "scan_cap", "modulus",
        "_reduction", "_generator", "_unit_factors", "zero", "one",
    )

    def __init__(self, p: int, m: int = 1, scan_cap: int = DEFAULT_SCAN_CAP):
        if not is_prime(p) or p < 3:
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.order = p ** m
        self.scan_cap = scan_cap
        self.modulus = _find_irreducible(p, m)
        self._reduction = self._reduction_rows()
        self._generator = None
        self._unit_factors = None
        self.zero = FieldElement(self, (0,) * m)
        self.one = FieldElement(self, (1,) + (0,) * (m - 1))

    def _reduction_rows(self):
        # rows[k] = coefficients of x^k reduced mod the modulus, m <= k <= 2m-2
        p, m = self.p, self.m
        if m == 1:
            return {}
        base = [(-c) % p for c in self.modulus[:m]]
        rows = {m: tuple(base)}
        r = base
        for k in range(m + 1, 2 * m - 1):
            carry = r[-1]
            r = [0] + r[:-1]
            if carry:
                r = [(s + carry * b) % p for s, b in zip(r, base)]
            rows[k] = tuple(r)
        return rows

    def element(self, coeffs) -> FieldElement:
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.m:
            raise ValueError("too many coefficients")
        cs += [0] * (self.m - len(cs))
        return FieldElement(self, tuple(cs))

    def __call__(self, value: int) -> FieldElement:
        """Embed an integer as a constant of the prime field."""
        return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))

    def from_index(self, k: int) -> FieldElement:
        digits = []
        for _ in range(self.m):
            digits.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(digits))

    def elements(self):
        """All field elements in canonical index order."""
        for k in range(self.order):
            yield self.from_index(k)

    def random_element(self, rng) -> FieldElement:
        return self.from_index(rng.randrange(self.order))

    def unit_group_factors(self) -> tuple[int, ...]:
        if self._unit_factors is None:
            self._unit_factors = prime_factors(self.order - 1)
        return self._unit_factors

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


class FieldElement:
    """Immutable element of a GF instance."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        p, m = f.p, f.m
        if m == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % p,))
        a, b = self.coeffs, other.coeffs
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        res = conv[:m]
        rows = f._reduction
        for k in range(m, 2 * m - 1):
            ck = conv[k]
            if ck:
                row = rows[k]
                for i in range(m):
                    if row[i]:
                        res[i] += ck * row[i]
        return FieldElement(f, tuple(c % p for c in res))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        f = self.field
        if self.is_zero():
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return f.one if e == 0 else f.zero
        q1 = f.order - 1
        e %= q1
        result, base = f.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> FieldElement:
        return self ** self.field.p

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c > 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c > 1 else f"t^{i}")
        return " + ".join(terms) if terms else "0"


_FIELDS: dict[tuple, GF] = {}


def make_extension_field(p: int, m: int = 1, scan_cap: int = DEFAULT_SCAN_CAP) -> GF:
    """Construct (and memoize) the field GF(p^m) with its canonical modulus."""
    key = (p, m, scan_cap)
    field = _FIELDS.get(key)
    if field is None:
        field = _FIELDS[key] = GF(p, m, scan_cap)
    return field


def multiplicative_order(a: FieldElement) -> int:
    """Least n >= 1 with a**n == 1; divides p^m - 1."""
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    n = a.field.order - 1
    for ell in a.field.unit_group_factors():
        while n % ell == 0 and (a ** (n // ell)) == a.field.one:
            n //= ell
    return n


def find_generator(field: GF) -> FieldElement:
    """Smallest (in canonical index order) generator of the unit group."""
    if field._generator is not None:
        return field._generator
    if field.order > field.scan_cap:
        raise FieldTooLargeError(
            f"field of order {field.order} exceeds scan cap {field.scan_cap}"
        )
    q1 = field.order - 1
    factors = field.unit_group_factors()
    for k in range(1, field.order):
        a = field.from_index(k)
        if all((a ** (q1 // ell)) != field.one for ell in factors):
            field._generator = a
            return a
    raise RuntimeError("no generator found")  # unreachable: unit group is cyclic


def solve_power_equation(field: GF, n: int, a: FieldElement):
    """All x in the field with x**n == a (a nonzero).

    The solution count is 0 or gcd(n, p^m - 1); there are solutions exactly
    when a**((p^m - 1) / gcd(n, p^m - 1)) == 1.  The search walks the cyclic
    subgroup generated by g**n (one multiplication per step), which visits
    every candidate value of x**n exactly once.
    """
    if a.is_zero():
        raise ValueError("right-hand side must be nonzero")
    if n < 1:
        raise ValueError("exponent must be >= 1")
    if field.order > field.scan_cap:
        raise FieldTooLargeError(
            f"field of order {field.order} exceeds scan cap {field.scan_cap}"
        )
    q1 = field.order - 1
    g = math.gcd(n, q1)
    if (a ** (q1 // g)) != field.one:
        return ()
    gamma = find_generator(field)
    delta = gamma ** n
    period = q1 // g
    hit = None
    z = field.one
    for k in range(period):
        if z == a:
            hit = k
            break
        z = z * delta
    if hit is None:
        raise RuntimeError("solvability criterion held but no solution found")
    step = gamma ** period
    x = gamma ** hit
    sols = []
    for _ in range(g):
        sols.append(x)
        x = x * step
    sols.sort(key=lambda s: s.index)
    for s in sols:
        if (s ** n) != a:
            raise RuntimeError("internal error: bad solution from subgroup walk")
    return tuple(sols)
