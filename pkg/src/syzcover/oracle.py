"""Point-evaluation oracle for symbolic identities.

Every identity the symbolic engine asserts (a polynomial, fraction or
formal polynomial claimed to be zero, or claimed to be nonzero) can be
re-checked numerically: evaluate at sampled curve points over a quadratic
extension, with fresh random values for any matrix indeterminates.  The
evaluation path shares nothing with the normal-form engine beyond raw
field arithmetic, so agreement is a real cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dfield

from .curve import CurveContext, CurvePolynomial, LocalFraction, random_curve_points
from .formal import FormalPolynomial
from .gf import make_extension_field


@dataclass
class Claim:
    """One asserted identity: obj should vanish (or not) identically."""

    kind: str  # "zero" or "nonzero"
    name: str
    obj: object


def zero_claim(name, obj):
    return Claim("zero", name, obj)


def nonzero_claim(name, obj):
    return Claim("nonzero", name, obj)


@dataclass
class CheckOutcome:
    ok: bool
    detail: str
    claims: list = dfield(default_factory=list)


class PointOracle:
    """Evaluates claims at sampled curve points over GF(p^2)."""

    def __init__(self, ctx: CurveContext, seed: int = 0, points: int = 20):
        self.ctx = ctx
        self.field = make_extension_field(ctx.p, 2)
        rng = random.Random(seed * 1000003 + ctx.p * 101 + ctx.exponent)
        self.rng = rng
        self.points = random_curve_points(ctx, self.field, points, rng, units=True)

    def _values(self, obj):
        if isinstance(obj, (CurvePolynomial, LocalFraction)):
            for pt in self.points:
                yield obj.evaluate(pt)
        elif isinstance(obj, FormalPolynomial):
            for pt in self.points:
                assignment = {
                    name: self.field.from_index(self.rng.randrange(self.field.order))
                    for name in obj.vars
                }
                yield obj.evaluate(assignment, pt)
        else:
            raise TypeError(f"cannot evaluate {type(obj).__name__}")

    def check(self, claim: Claim) -> bool:
        if claim.kind == "zero":
            return all(v.is_zero() for v in self._values(claim.obj))
        if claim.kind == "nonzero":
            return any(not v.is_zero() for v in self._values(claim.obj))
        raise ValueError(f"unknown claim kind {claim.kind!r}")

    def check_all(self, claims) -> tuple[bool, str]:
        for claim in claims:
            if not self.check(claim):
                return False, f"oracle mismatch on {claim.name}"
        return True, f"{len(claims)} identities re-checked at {len(self.points)} points"


class OracleSuite:
    """Routes claims to a per-context oracle, creating them on demand."""

    def __init__(self, seed: int = 0, points: int = 20):
        self.seed = seed
        self.points = points
        self._oracles: dict[CurveContext, PointOracle] = {}

    def oracle_for(self, ctx: CurveContext) -> PointOracle:
        oracle = self._oracles.get(ctx)
        if oracle is None:
            oracle = self._oracles[ctx] = PointOracle(ctx, self.seed, self.points)
        return oracle

    def check_all(self, claims) -> tuple[bool, str]:
        count = 0
        for claim in claims:
            if not self.oracle_for(claim.obj.ctx).check(claim):
                return False, f"oracle mismatch on {claim.name}"
            count += 1
        return True, f"{count} identities re-checked at {self.points} points each"
