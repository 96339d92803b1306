"""The mod-n Heisenberg group and its action on k[x_1..x_n, alpha^±1, beta^±1].

The n-dimensional representation is induced from the character
g -> zeta^a13(g) of N = ker(a12), using the left cosets E12^i N.  Writing
g E12^i = E12^(i + a12) n' with n' in N gives

    g u_i = zeta^(a13 - (i + a12) * a23) u_(i + a12).

The polynomial variables x_1..x_n are identified with u_0..u_(n-1), and a
group element acts on polynomials by the algebra automorphism extending this
linear map.  In that convention E12 cycles x_1 -> x_2 -> ... -> x_n -> x_1,
E23 scales x_i by zeta^-(i-1) and E13 scales every x_i by zeta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cyclotomic import CycloNum, zeta_pow
from .polyring import LaurentPoly, RingMap, RingSpec, apply_map

__all__ = [
    "GroupElement",
    "MonomialMatrix",
    "group_mul",
    "group_inv",
    "identity",
    "E12",
    "E13",
    "E23",
    "elements",
    "induced_rep",
    "sigma_ring",
    "sigma_action",
    "is_fixed",
]


@dataclass(frozen=True)
class GroupElement:
    """Upper unitriangular 3x3 matrix over Z/n, stored by its three free entries."""

    modulus: int
    a12: int = 0
    a13: int = 0
    a23: int = 0

    def __post_init__(self):
        n = self.modulus
        if n < 2:
            raise ValueError(f"modulus must be >= 2, got {n}")
        object.__setattr__(self, "a12", self.a12 % n)
        object.__setattr__(self, "a13", self.a13 % n)
        object.__setattr__(self, "a23", self.a23 % n)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    def inverse(self) -> "GroupElement":
        return group_inv(self)

    def __pow__(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.modulus)
        for _ in range(k):
            out = out * self
        return out

    def in_N(self) -> bool:
        return self.a12 == 0

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return ((1, self.a12, self.a13), (0, 1, self.a23), (0, 0, 1))

    def to_json(self) -> dict:
        return {"n": self.modulus, "a12": self.a12, "a13": self.a13, "a23": self.a23}

    @classmethod
    def from_json(cls, data) -> "GroupElement":
        return cls(data["n"], data["a12"], data["a13"], data["a23"])


def group_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.modulus != h.modulus:
        raise ValueError(f"modulus mismatch: {g.modulus} vs {h.modulus}")
    return GroupElement(
        g.modulus, g.a12 + h.a12, g.a13 + h.a13 + g.a12 * h.a23, g.a23 + h.a23
    )


def group_inv(g: GroupElement) -> GroupElement:
    return GroupElement(g.modulus, -g.a12, g.a12 * g.a23 - g.a13, -g.a23)


def identity(n: int) -> GroupElement:
    return GroupElement(n)


def E12(n: int) -> GroupElement:
    return GroupElement(n, 1, 0, 0)


def E13(n: int) -> GroupElement:
    return GroupElement(n, 0, 1, 0)


def E23(n: int) -> GroupElement:
    return GroupElement(n, 0, 0, 1)


def elements(n: int):
    """All n^3 elements of H(n)."""
    for a12, a13, a23 in product(range(n), repeat=3):
        yield GroupElement(n, a12, a13, a23)


@dataclass(frozen=True)
class MonomialMatrix:
    """Matrix with one nonzero entry per column: column i has ``scalars[i]`` in row ``perm[i]``."""

    dim: int
    perm: tuple[int, ...]
    scalars: tuple[CycloNum, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(self.dim)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{self.dim - 1}")

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        # (self @ other) u_i = self(other u_i)
        perm = tuple(self.perm[other.perm[i]] for i in range(self.dim))
        scalars = tuple(
            self.scalars[other.perm[i]] * other.scalars[i] for i in range(self.dim)
        )
        return MonomialMatrix(self.dim, perm, scalars)

    def dense(self) -> list[list[CycloNum]]:
        order = self.scalars[0].order
        rows = [[CycloNum.zero(order) for _ in range(self.dim)] for _ in range(self.dim)]
        for i, (j, c) in enumerate(zip(self.perm, self.scalars)):
            rows[j][i] = c
        return rows


def induced_rep(n: int):
    """Return ``g -> MonomialMatrix`` for Ind_N^H of g -> zeta^a13(g)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")

    @lru_cache(maxsize=None)
    def rep(g: GroupElement) -> MonomialMatrix:
        if g.modulus != n:
            raise ValueError(f"element of H({g.modulus}) given to representation of H({n})")
        perm = tuple((i + g.a12) % n for i in range(n))
        scalars = tuple(zeta_pow(n, g.a13 - (i + g.a12) * g.a23) for i in range(n))
        return MonomialMatrix(n, perm, scalars)

    return rep


@lru_cache(maxsize=None)
def sigma_ring(n: int) -> RingSpec:
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    return RingSpec(xs + ("alpha", "beta"), ("alpha", "beta"), n)


def sigma_action(g: GroupElement, ring: RingSpec | None = None) -> RingMap:
    """Substitution automorphism of k[x, alpha^±1, beta^±1] given by sigma(g).

    Satisfies sigma_action(g*h) == compose(sigma_action(g), sigma_action(h)).
    """
    n = g.modulus
    ring = ring or sigma_ring(n)
    mat = induced_rep(n)(g)
    images = {}
    for i in range(n):
        images[f"x{i + 1}"] = ring.var(f"x{mat.perm[i] + 1}").scale(mat.scalars[i])
    images["alpha"] = ring.var("alpha").scale(zeta_pow(n, g.a12))
    images["beta"] = ring.var("beta").scale(zeta_pow(n, g.a23))
    for v in ring.variables:
        images.setdefault(v, ring.var(v))
    return RingMap.from_dict(ring, ring, images, name=f"sigma{g.a12}{g.a13}{g.a23}")


def is_fixed(f: LaurentPoly, n: int | None = None) -> bool:
    """True iff every element of H(n) fixes f (checked on the generators E12, E23, E13)."""
    n = n or f.ring.coeff_order
    return all(apply_map(sigma_action(g(n), f.ring), f) == f for g in (E12, E23, E13))
