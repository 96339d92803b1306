"""The splitting variety X(a, b): specialisation, membership and point search.

X(a, b) is cut out by the kernel generators with a, b replaced by field
values, minus the locus S.  Because alpha and beta are units, the only points
whose preimage is fixed by a nontrivial group element have x = 0, and those
map to z = 0; so S is the single point z = 0 here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .cyclotomic import CycloNum, cyclo_to_prime_field, is_prime, primitive_root_of_unity
from .polyring import LaurentPoly
from .splitkernel import ThetaSystem, WeightedIdeal, build_theta

__all__ = [
    "CyclotomicField",
    "PrimeField",
    "SpecializedVariety",
    "VarietyPoint",
    "PointSearch",
    "specialize",
    "is_on_variety",
    "theta_point",
    "find_point",
    "random_theta_check",
]


@dataclass(frozen=True)
class CyclotomicField:
    """Q(zeta_n) with exact CycloNum elements."""

    n: int

    @property
    def name(self) -> str:
        return f"Q(zeta_{self.n})"

    def coerce(self, x) -> CycloNum:
        if isinstance(x, CycloNum):
            if x.order != self.n:
                raise ValueError(f"element of Q(zeta_{x.order}) given to {self.name}")
            return x
        return CycloNum.scalar(self.n, x)

    def coeff(self, c: CycloNum) -> CycloNum:
        return self.coerce(c)

    def zero(self):
        return CycloNum.zero(self.n)

    def one(self):
        return CycloNum.one(self.n)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def power(self, x, k: int):
        return x**k if k >= 0 else x.inverse() ** (-k)

    def random_element(self, rng: random.Random, bound: int = 3) -> CycloNum:
        deg = len(CycloNum.zero(self.n).coeffs)
        return CycloNum(self.n, [rng.randint(-bound, bound) for _ in range(deg)])

    def random_unit(self, rng: random.Random) -> CycloNum:
        while True:
            x = self.random_element(rng)
            if not x.is_zero():
                return x

    def export(self, x) -> list[str]:
        return x.to_json()

    def to_json(self) -> dict:
        return {"kind": "cyclotomic", "n": self.n}


@dataclass(frozen=True)
class PrimeField:
    """F_q with zeta sent to a fixed primitive n-th root of unity."""

    q: int
    n: int
    root: int = 0

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")
        if (self.q - 1) % self.n:
            raise ValueError(f"F_{self.q} has no root of unity of order {self.n}")
        if not self.root:
            object.__setattr__(self, "root", primitive_root_of_unity(self.q, self.n))

    @property
    def name(self) -> str:
        return f"F_{self.q}"

    def coerce(self, x) -> int:
        return int(x) % self.q

    def coeff(self, c: CycloNum) -> int:
        return cyclo_to_prime_field(c, self.q, self.root)

    def zero(self):
        return 0

    def one(self):
        return 1

    def is_zero(self, x) -> bool:
        return x % self.q == 0

    def power(self, x, k: int) -> int:
        return pow(x, k, self.q)

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    def random_unit(self, rng: random.Random) -> int:
        return rng.randrange(1, self.q)

    def export(self, x) -> int:
        return x % self.q

    def to_json(self) -> dict:
        return {"kind": "prime", "q": self.q, "n": self.n, "root": self.root}


Field = CyclotomicField | PrimeField


def _evaluate(f: LaurentPoly, values: Sequence, fld: Field):
    total = fld.zero()
    for e, c in f.terms.items():
        t = fld.coeff(c)
        for v, k in zip(values, e):
            if k:
                t = t * fld.power(v, k)
        total = total + t
    return fld.coerce(total)


@dataclass(frozen=True)
class VarietyPoint:
    z: tuple

    def to_json(self, fld: Field) -> list:
        return [fld.export(v) for v in self.z]


@dataclass
class SpecializedVariety:
    field: Field
    a_val: object
    b_val: object
    # each equation: {z-exponents: field coefficient}
    equations: list[dict] = field(repr=False)

    def evaluate(self, z: Sequence) -> list:
        fld = self.field
        out = []
        for eq in self.equations:
            total = fld.zero()
            for e, c in eq.items():
                t = c
                for v, k in zip(z, e):
                    if k:
                        t = t * fld.power(v, k)
                total = total + t
            out.append(fld.coerce(total))
        return out


def specialize(ideal, a_val, b_val, fld: Field) -> SpecializedVariety:
    """Substitute a -> a_val, b -> b_val into every generator."""
    gens = ideal.generators if isinstance(ideal, WeightedIdeal) else list(ideal)
    a, b = fld.coerce(a_val), fld.coerce(b_val)
    if fld.is_zero(a) or fld.is_zero(b):
        raise ValueError("a and b must be units")
    if gens and gens[0].ring.coeff_order != fld.n:
        raise ValueError(f"generators over Q(zeta_{gens[0].ring.coeff_order}) vs field for n={fld.n}")
    equations = []
    for g in gens:
        eq: dict = {}
        for e, c in g.terms.items():
            r, s, t = e[:-2], e[-2], e[-1]
            val = fld.coeff(c) * fld.power(a, s) * fld.power(b, t)
            eq[r] = eq.get(r, fld.zero()) + val
        equations.append({r: fld.coerce(v) for r, v in eq.items() if not fld.is_zero(fld.coerce(v))})
    return SpecializedVariety(fld, a, b, equations)


def is_on_variety(pt, sv: SpecializedVariety) -> bool:
    fld = sv.field
    z = pt.z if isinstance(pt, VarietyPoint) else tuple(fld.coerce(v) for v in pt)
    if all(fld.is_zero(v) for v in z):
        return False
    return all(fld.is_zero(v) for v in sv.evaluate(z))


def theta_point(x: Sequence, alpha, beta, fld: Field, theta_system: ThetaSystem | None = None):
    """Evaluate the theta-images at (x, alpha, beta); returns (point, alpha^n, beta^n)."""
    ts = theta_system or build_theta(fld.n)
    xs = [fld.coerce(v) for v in x]
    if len(xs) != ts.n:
        raise ValueError(f"expected {ts.n} coordinates, got {len(xs)}")
    if all(fld.is_zero(v) for v in xs):
        raise ValueError("x = 0 maps onto the excluded locus")
    al, be = fld.coerce(alpha), fld.coerce(beta)
    if fld.is_zero(al) or fld.is_zero(be):
        raise ValueError("alpha and beta must be units")
    values = xs + [al, be]
    N = len(ts.weights)
    z = tuple(_evaluate(img, values, fld) for img in ts.theta.images[:N])
    return VarietyPoint(z), fld.power(al, ts.n), fld.power(be, ts.n)


@dataclass
class PointSearch:
    q: int
    a: int
    b: int
    found: bool
    point: list | None
    method: str
    checked: int
    roots_available: bool

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "a": self.a,
            "b": self.b,
            "found": self.found,
            "point": self.point,
            "method": self.method,
            "checked": self.checked,
        }


def _nth_root(x: int, n: int, q: int) -> int | None:
    for r in range(1, q):
        if pow(r, n, q) == x:
            return r
    return None


def find_point(
    ideal: WeightedIdeal,
    a_val: int,
    b_val: int,
    q: int,
    budget: int = 1000,
    seed: int = 0,
    theta_system: ThetaSystem | None = None,
) -> PointSearch:
    """Look for an F_q-point of X(a, b).

    When a and b are n-th powers the point is built as a theta-image from a
    random x != 0; otherwise random z-vectors are tried, up to ``budget``.
    """
    n = ideal.n
    fld = PrimeField(q, n)
    a, b = a_val % q, b_val % q
    sv = specialize(ideal, a, b, fld)
    ts = theta_system or build_theta(n)
    rng = random.Random(seed)
    al, be = _nth_root(a, n, q), _nth_root(b, n, q)
    roots = al is not None and be is not None
    method = "theta" if roots else "random"
    for checked in range(1, budget + 1):
        if roots:
            x = [rng.randrange(q) for _ in range(n)]
            if not any(x):
                continue
            pt, _, _ = theta_point(x, al, be, fld, ts)
        else:
            pt = VarietyPoint(tuple(rng.randrange(q) for _ in range(len(ts.weights))))
        if is_on_variety(pt, sv):
            return PointSearch(q, a, b, True, pt.to_json(fld), method, checked, roots)
    return PointSearch(q, a, b, False, None, method, budget, roots)


def random_theta_check(
    ideal: WeightedIdeal,
    fld: Field,
    draws: int = 200,
    seed: int = 0,
    theta_system: ThetaSystem | None = None,
) -> list[tuple]:
    """Evaluate every generator at theta-images of random (x, alpha, beta).

    Returns the failing draws as (x, alpha, beta, generator index); empty
    means every generator vanished every time.
    """
    ts = theta_system or build_theta(ideal.n)
    rng = random.Random(seed)
    failures = []
    for _ in range(draws):
        while True:
            x = [fld.random_element(rng) for _ in range(ts.n)]
            if not all(fld.is_zero(v) for v in x):
                break
        al, be = fld.random_unit(rng), fld.random_unit(rng)
        pt, a, b = theta_point(x, al, be, fld, ts)
        values = list(pt.z) + [a, b]
        for i, g in enumerate(ideal.generators):
            if not fld.is_zero(_evaluate(g, values, fld)):
                failures.append((tuple(x), al, be, i))
    return failures
