"""Simultaneous (E12, E23) eigenbasis of Sym^n V and the change of basis p.

E23 is diagonal on x-monomials, and E12 shifts the variable indices, so
Sym^n V splits into shift orbits of monomials with a common E23 weight.  A
discrete Fourier sum along each orbit diagonalises E12.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycloNum, is_prime, zeta_pow
from .heisenberg import sigma_ring
from .polyring import LaurentPoly, RingMap, RingSpec, compose
from .veronese import sym_basis, w_ring

__all__ = [
    "WeightedVector",
    "EigenSystem",
    "build_eigensystem",
    "v_ring",
    "eigen_project",
    "p_of",
    "monomial_weight",
    "unit_weights",
    "weight_decomposition",
    "diagram_commutes",
]

Weight = tuple[int, int]


@dataclass(frozen=True)
class WeightedVector:
    """Degree-n form with eigenvalues (zeta^m, zeta^k) under (E12, E23)."""

    vector: LaurentPoly
    weight: Weight


def _shift(e: tuple[int, ...]) -> tuple[int, ...]:
    # E12 sends x_i to x_(i+1), so the exponent of x_(i+1) becomes e_i
    return e[-1:] + e[:-1]


def _e23_weight(e: tuple[int, ...], n: int) -> int:
    return -sum(i * k for i, k in enumerate(e)) % n


def _orbits(n: int) -> list[list[tuple[int, ...]]]:
    seen = set()
    orbits = []
    for e in sym_basis(n):
        if e in seen:
            continue
        # anchor: member with the largest exponent profile read from x_n down
        members = [e]
        cur = _shift(e)
        while cur != e:
            members.append(cur)
            cur = _shift(cur)
        seen.update(members)
        anchor = max(members, key=lambda m: tuple(reversed(m)))
        orbit = [anchor]
        cur = _shift(anchor)
        while cur != anchor:
            orbit.append(cur)
            cur = _shift(cur)
        orbits.append(orbit)
    return orbits


@lru_cache(maxsize=None)
def v_ring(n: int) -> RingSpec:
    names = tuple(f"v{i}" for i in range(1, len(sym_basis(n)) + 1))
    return RingSpec(names + ("alpha", "beta"), ("alpha", "beta"), n)


def unit_weights(n: int) -> dict[str, Weight]:
    return {"alpha": (1, 0), "alpha^-1": (n - 1, 0), "beta": (0, 1), "beta^-1": (0, n - 1)}


@dataclass(frozen=True)
class EigenSystem:
    n: int
    vectors: tuple[WeightedVector, ...]
    p: RingMap
    p_inv: RingMap
    pi_prime: RingMap

    @property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(v.weight for v in self.vectors)

    @property
    def N(self) -> int:
        return len(self.vectors)


def monomial_weight(exps, system: EigenSystem) -> Weight:
    """Eigen-weight of a monomial in v_1..v_N, alpha, beta."""
    n = system.n
    m = k = 0
    for r, (wm, wk) in zip(exps, system.weights):
        m += r * wm
        k += r * wk
    m += exps[system.N]
    k += exps[system.N + 1]
    return m % n, k % n


@lru_cache(maxsize=None)
def build_eigensystem(n: int) -> EigenSystem:
    if not is_prime(n):
        raise ValueError(f"eigenbasis construction needs prime n, got {n}")
    table = sym_basis(n)
    xr = sigma_ring(n)
    wr = w_ring(n, units=True)
    vr = v_ring(n)
    N = len(table)

    orbits = _orbits(n)
    full = [o for o in orbits if len(o) == n]
    fixed = [o for o in orbits if len(o) == 1]
    full.sort(key=lambda o: (_e23_weight(o[0], n), tuple(-k for k in reversed(o[0]))))

    vectors: list[WeightedVector] = []
    # expansion[v index] = {monomial: coeff}; inverse[monomial] = {v index: coeff}
    expansion: list[dict] = []
    inverse: dict[tuple, dict[int, CycloNum]] = {}
    inv_n = CycloNum.scalar(n, 1) / n
    for orbit in full:
        k23 = _e23_weight(orbit[0], n)
        for k in range(n):
            coeffs = {mono: zeta_pow(n, -j * k) for j, mono in enumerate(orbit)}
            idx = len(vectors)
            vec = LaurentPoly(xr, {m + (0, 0): c for m, c in coeffs.items()})
            vectors.append(WeightedVector(vec, (k, k23)))
            expansion.append(coeffs)
            for j, mono in enumerate(orbit):
                inverse.setdefault(mono, {})[idx] = zeta_pow(n, j * k) * inv_n
    for (mono,) in fixed:
        idx = len(vectors)
        vectors.append(WeightedVector(xr.monomial(mono + (0, 0)), (0, _e23_weight(mono, n))))
        expansion.append({mono: CycloNum.one(n)})
        inverse[mono] = {idx: CycloNum.one(n)}
    assert len(vectors) == N

    def v_lin(d: dict[int, CycloNum]) -> LaurentPoly:
        terms = {}
        for i, c in d.items():
            e = [0] * (N + 2)
            e[i] = 1
            terms[tuple(e)] = c
        return LaurentPoly(vr, terms)

    def w_lin(d: dict[tuple, CycloNum]) -> LaurentPoly:
        terms = {}
        for mono, c in d.items():
            e = [0] * (N + 2)
            e[table.index_of[mono]] = 1
            terms[tuple(e)] = c
        return LaurentPoly(wr, terms)

    p = RingMap(
        wr,
        vr,
        tuple(v_lin(inverse[mono]) for mono in table) + (vr.var("alpha"), vr.var("beta")),
        name="p",
    )
    p_inv = RingMap(
        vr,
        wr,
        tuple(w_lin(ex) for ex in expansion) + (wr.var("alpha"), wr.var("beta")),
        name="p_inv",
    )
    pi_prime = RingMap(
        vr,
        xr,
        tuple(v.vector for v in vectors) + (xr.var("alpha"), xr.var("beta")),
        name="pi_prime",
    )
    return EigenSystem(n, tuple(vectors), p, p_inv, pi_prime)


def p_of(f: LaurentPoly, system: EigenSystem) -> LaurentPoly:
    """Rewrite a polynomial in the w-basis through the eigenbasis."""
    if f.ring == w_ring(system.n):
        f = LaurentPoly(system.p.source, {e + (0, 0): c for e, c in f.terms.items()})
    return system.p(f)


def eigen_project(f: LaurentPoly, weight: Weight, system: EigenSystem) -> LaurentPoly:
    """Sum of the terms of ``f`` (in the v-ring) whose eigen-weight is ``weight``."""
    n = system.n
    target = (weight[0] % n, weight[1] % n)
    return LaurentPoly(
        f.ring,
        {e: c for e, c in f.terms.items() if monomial_weight(e, system) == target},
    )


def weight_decomposition(f: LaurentPoly, system: EigenSystem) -> dict[Weight, LaurentPoly]:
    """All nonzero eigen-projections of ``f``, keyed by weight."""
    parts: dict[Weight, dict] = {}
    for e, c in f.terms.items():
        parts.setdefault(monomial_weight(e, system), {})[e] = c
    return {w: LaurentPoly(f.ring, t) for w, t in sorted(parts.items())}


def diagram_commutes(system: EigenSystem) -> bool:
    """pi' o p == pi and p_inv o p == id on every w-variable."""
    from .polyring import identity_map
    from .veronese import pi_map

    return (
        compose(system.pi_prime, system.p).images == pi_map(system.n, True).images
        and compose(system.p_inv, system.p).images == identity_map(system.p.source).images
    )
