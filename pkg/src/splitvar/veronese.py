"""Degree-n monomials, the Veronese monomial map pi and its toric ideal."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .heisenberg import sigma_ring
from .polyring import LaurentPoly, RingMap, RingSpec, grevlex_key

__all__ = [
    "MonomialTable",
    "sym_basis",
    "w_ring",
    "x_ring",
    "pi_map",
    "toric_ideal",
    "quadric_fibers",
    "classify_generators_n3",
    "CATEGORY_SIZES_N3",
]

# w_i -> x-monomial for n = 3; the ordering that makes the phi images line up
_N3_TABLE = (
    (1, 1, 1),
    (3, 0, 0),
    (0, 3, 0),
    (0, 0, 3),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (0, 2, 1),
    (1, 0, 2),
    (0, 1, 2),
)

CATEGORY_SIZES_N3 = {1: 3, 2: 3, 3: 6, 4: 12, 5: 3}


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for k in range(n, -1, -1):
        for rest in _compositions(n - k, parts - 1):
            yield (k,) + rest


@dataclass(frozen=True)
class MonomialTable:
    n: int
    entries: tuple[tuple[int, ...], ...]
    index_of: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index_of:
            self.index_of.update({e: i for i, e in enumerate(self.entries)})

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]


@lru_cache(maxsize=None)
def sym_basis(n: int) -> MonomialTable:
    """Degree-n monomials in n variables; graded-lex order except the fixed n = 3 table."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    entries = _N3_TABLE if n == 3 else tuple(_compositions(n, n))
    assert len(entries) == comb(2 * n - 1, n)
    return MonomialTable(n, entries)


@lru_cache(maxsize=None)
def w_ring(n: int, units: bool = False) -> RingSpec:
    names = tuple(f"w{i}" for i in range(1, len(sym_basis(n)) + 1))
    if units:
        return RingSpec(names + ("alpha", "beta"), ("alpha", "beta"), n)
    return RingSpec(names, (), n)


def x_ring(n: int) -> RingSpec:
    return sigma_ring(n)


@lru_cache(maxsize=None)
def pi_map(n: int, units: bool = False) -> RingMap:
    """w_i -> i-th degree-n monomial; with ``units`` this is pi tensored with k[alpha^±1, beta^±1]."""
    src = w_ring(n, units)
    tgt = x_ring(n)
    images = []
    for e in sym_basis(n):
        images.append(tgt.monomial(tuple(e) + (0, 0)))
    if units:
        images += [tgt.var("alpha"), tgt.var("beta")]
    return RingMap(src, tgt, tuple(images), name="pi")


def quadric_fibers(n: int) -> dict[tuple, list[tuple[int, int]]]:
    """Group the products w_i*w_j (i <= j) by the exponent vector they map to."""
    table = sym_basis(n)
    fibers: dict[tuple, list[tuple[int, int]]] = defaultdict(list)
    for i, j in combinations_with_replacement(range(len(table)), 2):
        s = tuple(a + b for a, b in zip(table[i], table[j]))
        fibers[s].append((i, j))
    return dict(fibers)


def toric_ideal(n: int) -> list[LaurentPoly]:
    """Inter-reduced quadric generators of ker(pi).

    Within each fiber of equal exponent sums the binomials m - m' span a space
    whose reduced echelon basis is {m_k - m_min}; taking it for every fiber
    gives a minimal generating set (the Veronese ideal is generated in degree 2).
    """
    ring = w_ring(n)
    N = len(sym_basis(n))
    one = ring.one().terms[(0,) * N]
    gens = []
    for members in quadric_fibers(n).values():
        if len(members) < 2:
            continue
        monos = []
        for i, j in members:
            e = [0] * N
            e[i] += 1
            e[j] += 1
            monos.append(tuple(e))
        monos.sort(key=grevlex_key, reverse=True)
        low = monos[-1]
        for m in monos[:-1]:
            gens.append(LaurentPoly(ring, {m: one, low: -one}))
    gens.sort(key=lambda g: grevlex_key(g.lead_term()[0]), reverse=True)
    return gens


def _binomial_sides(g: LaurentPoly, table: MonomialTable) -> tuple[tuple, tuple]:
    if len(g.terms) != 2:
        raise ValueError(f"{g} is not a binomial")
    sides = []
    for e in g.terms:
        if sum(e) != 2 or min(e) < 0:
            raise ValueError(f"{g} is not a quadratic binomial")
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        sides.append(tuple(table.entries[i] for i in idx))
    return sides[0], sides[1]


def classify_generators_n3(gens) -> dict[LaurentPoly, int | None]:
    """Assign each quadric of ker(pi), n = 3, to one of the five relation types.

    The type is read off the shape of the common x-monomial of both sides:
    (3,3,0) type 1, (4,1,1) type 2, (4,2,0) type 3, (3,2,1) type 4,
    (2,2,2) type 5.  Generators that fit no type (or do not vanish under pi)
    map to None.
    """
    table = sym_basis(3)
    shapes = {(3, 3, 0): 1, (4, 1, 1): 2, (4, 2, 0): 3, (3, 2, 1): 4, (2, 2, 2): 5}
    out: dict[LaurentPoly, int | None] = {}
    for g in gens:
        try:
            left, right = _binomial_sides(g, table)
        except ValueError:
            out[g] = None
            continue
        sl = tuple(a + b for a, b in zip(*left))
        sr = tuple(a + b for a, b in zip(*right))
        coeffs = sorted(c.rational() for c in g.terms.values() if c.is_rational())
        if sl != sr or coeffs != [-1, 1]:
            out[g] = None
            continue
        out[g] = shapes.get(tuple(sorted(sl, reverse=True)))
    return out
