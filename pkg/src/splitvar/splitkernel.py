"""The invariant map theta, its factorisation phi, and generators of ker(theta).

Every toric quadric u of ker(pi) is pushed through the eigenbasis, h = p(u),
and split by eigen-weight.  Each weight piece h_(m,k) lies in ker(pi'), and
multiplying it by alpha^(-m) beta^(-k) (exponents reduced mod n) lands in the
H-invariant part, which is the image of the z-ring under theta.  Rewriting
that piece in z, a, b gives one generator of ker(theta).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .eigenbasis import EigenSystem, build_eigensystem, p_of, weight_decomposition
from .heisenberg import sigma_ring
from .polyring import (
    GroebnerBasis,
    LaurentPoly,
    RingMap,
    RingSpec,
    apply_map,
    compose,
    grevlex_key,
    groebner,
    ideal_contains,
)
from .reference_n3 import REFERENCE_KERNEL_N3
from .veronese import pi_map, toric_ideal, w_ring

__all__ = [
    "ThetaSystem",
    "WeightedIdeal",
    "KernelReport",
    "CrosscheckReport",
    "z_ring",
    "build_theta",
    "kernel_generators",
    "generate",
    "verify_kernel",
    "reference_generators_n3",
    "crosscheck_reference",
    "normalize_generator",
    "theta_equals_pi_phi",
]


@lru_cache(maxsize=None)
def z_ring(n: int) -> RingSpec:
    N = len(build_eigensystem(n).vectors)
    names = tuple(f"z{i}" for i in range(1, N + 1))
    return RingSpec(names + ("a", "b"), ("a", "b"), n)


@dataclass(frozen=True)
class ThetaSystem:
    n: int
    theta: RingMap
    phi: RingMap
    weights: tuple[tuple[int, int], ...]
    # alpha/beta exponents carried by theta(z_i)
    shifts: tuple[tuple[int, int], ...]
    eigensystem: EigenSystem = field(repr=False, compare=False)


def build_theta(n: int, eigensystem: EigenSystem | None = None) -> ThetaSystem:
    """theta(z_i) = alpha^(-m_i mod n) beta^(-k_i mod n) v_i, theta(a) = alpha^n, theta(b) = beta^n."""
    es = eigensystem or build_eigensystem(n)
    if es.n != n:
        raise ValueError(f"eigensystem built for n={es.n}, not {n}")
    zr = z_ring(n)
    xr = sigma_ring(n)
    wr = w_ring(n, units=True)
    alpha, beta = xr.var("alpha"), xr.var("beta")
    w_alpha, w_beta = wr.var("alpha"), wr.var("beta")
    shifts = tuple(((-m) % n, (-k) % n) for m, k in es.weights)
    theta_imgs, phi_imgs = [], []
    for i, (s, t) in enumerate(shifts):
        theta_imgs.append(alpha**s * beta**t * es.vectors[i].vector)
        phi_imgs.append(w_alpha**s * w_beta**t * es.p_inv.images[i])
    theta_imgs += [alpha**n, beta**n]
    phi_imgs += [w_alpha**n, w_beta**n]
    theta = RingMap(zr, xr, tuple(theta_imgs), name="theta")
    phi = RingMap(zr, wr, tuple(phi_imgs), name="phi")
    return ThetaSystem(n, theta, phi, es.weights, shifts, es)


@dataclass
class WeightedIdeal:
    """Generators of ker(theta) with the toric quadric and weight each came from."""

    n: int
    generators: list[LaurentPoly]
    provenance: list[dict]

    def __len__(self):
        return len(self.generators)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": z_ring(self.n).to_json(),
            "generators": [g.to_json()["terms"] for g in self.generators],
            "text": [g.format() for g in self.generators],
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data) -> "WeightedIdeal":
        ring = RingSpec.from_json(data["ring"])
        gens = [LaurentPoly.from_json({"terms": t}, ring) for t in data["generators"]]
        return cls(data["n"], gens, list(data["provenance"]))


def normalize_generator(g: LaurentPoly, nz: int) -> LaurentPoly:
    """Scale by a unit so the leading z-term is a bare monic z-monomial.

    The leading term is chosen by grevlex on the z-exponents, ties broken by
    the a, b exponents.
    """
    if not g:
        return g
    lead = max(g.terms, key=lambda e: (grevlex_key(e[:nz]), e[nz:]))
    c = g.terms[lead]
    shift = (0,) * nz + tuple(-k for k in lead[nz:])
    return g.shift(shift).scale(c.inverse())


def _v_piece_to_z(piece: LaurentPoly, weight, ts: ThetaSystem) -> LaurentPoly:
    n = ts.n
    N = len(ts.weights)
    zr = z_ring(n)
    m_star, k_star = (-weight[0]) % n, (-weight[1]) % n
    terms = {}
    for e, c in piece.terms.items():
        r = e[:N]
        ra, rb = e[N], e[N + 1]
        sa = sum(k * s for k, (s, _) in zip(r, ts.shifts))
        sb = sum(k * t for k, (_, t) in zip(r, ts.shifts))
        da, db = m_star + ra - sa, k_star + rb - sb
        if da % n or db % n:
            raise ArithmeticError(
                f"weight bookkeeping: alpha/beta excess {(da, db)} not divisible by {n}"
            )
        terms[r + (da // n, db // n)] = c
    return LaurentPoly(zr, terms)


def kernel_generators(
    n: int,
    toric_gens: list[LaurentPoly] | None = None,
    eigensystem: EigenSystem | None = None,
    theta_system: ThetaSystem | None = None,
    normalize: bool = True,
) -> WeightedIdeal:
    es = eigensystem or build_eigensystem(n)
    ts = theta_system or build_theta(n, es)
    if toric_gens is None:
        toric_gens = toric_ideal(n)
    nz = len(es.vectors)
    gens, prov = [], []
    for u in toric_gens:
        if not u:
            continue
        h = p_of(u, es)
        for weight, piece in weight_decomposition(h, es).items():
            g = _v_piece_to_z(piece, weight, ts)
            if normalize:
                g = normalize_generator(g, nz)
            gens.append(g)
            prov.append({"toric": u.format(), "weight": list(weight)})
    return WeightedIdeal(n, gens, prov)


def generate(n: int) -> tuple[WeightedIdeal, ThetaSystem]:
    """Run the whole pipeline: toric ideal, eigenbasis, theta, kernel generators."""
    es = build_eigensystem(n)
    ts = build_theta(n, es)
    return kernel_generators(n, toric_ideal(n), es, ts), ts


@dataclass
class KernelReport:
    residuals: list[LaurentPoly]
    generators: list[LaurentPoly]

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    @property
    def failures(self) -> list[int]:
        return [i for i, r in enumerate(self.residuals) if r]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": len(self.generators),
            "entries": [
                {"generator": g.format(), "residual": r.format(), "zero": r.is_zero()}
                for g, r in zip(self.generators, self.residuals)
            ],
        }


def verify_kernel(ideal, theta_system: ThetaSystem) -> KernelReport:
    gens = ideal.generators if isinstance(ideal, WeightedIdeal) else list(ideal)
    residuals = [apply_map(theta_system.theta, g) for g in gens]
    return KernelReport(residuals, gens)


def reference_generators_n3() -> list[LaurentPoly]:
    """The transcribed n = 3 generator list, in order, duplicates kept."""
    zr = z_ring(3)
    return [zr.parse(s) for s in REFERENCE_KERNEL_N3]


def _unit_class(g: LaurentPoly) -> LaurentPoly:
    return normalize_generator(g, g.ring.nvars - 2)


@dataclass
class ItemCheck:
    index: int
    text: str
    theta_zero: bool
    member: bool
    duplicate_of: int | None

    @property
    def flagged(self) -> bool:
        return not (self.theta_zero and self.member)


@dataclass
class CrosscheckReport:
    items: list[ItemCheck]
    computed_in_reference: list[bool]
    # computed and reference lists consist of the same generators up to units
    same_unit_classes: bool = False

    @property
    def duplicates(self) -> list[ItemCheck]:
        return [it for it in self.items if it.duplicate_of is not None]

    @property
    def flagged(self) -> list[ItemCheck]:
        return [it for it in self.items if it.flagged]

    @property
    def clean_items_in_computed(self) -> bool:
        return all(it.member for it in self.items if it.theta_zero)

    @property
    def passed(self) -> bool:
        return self.clean_items_in_computed and all(self.computed_in_reference)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "items": len(self.items),
            "distinct": len(self.items) - len(self.duplicates),
            "theta_dirty": [it.index + 1 for it in self.items if not it.theta_zero],
            "not_in_computed": [it.index + 1 for it in self.items if not it.member],
            "duplicates": [[it.index + 1, it.duplicate_of + 1] for it in self.duplicates],
            "same_unit_classes": self.same_unit_classes,
            "computed_not_in_reference": [
                i for i, ok in enumerate(self.computed_in_reference) if not ok
            ],
            "entries": [
                {
                    "index": it.index + 1,
                    "text": it.text,
                    "theta_zero": it.theta_zero,
                    "member": it.member,
                    "duplicate_of": None if it.duplicate_of is None else it.duplicate_of + 1,
                }
                for it in self.items
            ],
        }


def crosscheck_reference(
    theta_system: ThetaSystem,
    computed: WeightedIdeal,
    reference: list[LaurentPoly] | None = None,
    texts: list[str] | None = None,
    computed_gb: GroebnerBasis | None = None,
) -> CrosscheckReport:
    """Compare the computed kernel with a reference generator list (n = 3).

    Each reference item gets its theta-residual and membership in the
    computed ideal.  The computed generators are then tested for membership
    in the ideal of the theta-clean reference items.
    """
    if theta_system.n != 3:
        raise ValueError("the reference list only exists for n = 3")
    if reference is None:
        reference = reference_generators_n3()
        texts = list(REFERENCE_KERNEL_N3)
    texts = texts or [g.format() for g in reference]
    gb = computed_gb or groebner(computed.generators, ring=z_ring(3))
    members = ideal_contains(gb, reference)
    seen: dict[LaurentPoly, int] = {}
    items = []
    for i, (g, text, member) in enumerate(zip(reference, texts, members)):
        cls = _unit_class(g) if g else g
        dup = seen.get(cls)
        if dup is None:
            seen[cls] = i
        residual = apply_map(theta_system.theta, g)
        items.append(ItemCheck(i, text, residual.is_zero(), member, dup))
    clean = [g for g, it in zip(reference, items) if it.theta_zero]
    if clean:
        ref_gb = groebner(clean, ring=z_ring(3))
        back = ideal_contains(ref_gb, computed.generators)
    else:
        back = [False] * len(computed.generators)
    computed_classes = {_unit_class(g) for g in computed.generators if g}
    return CrosscheckReport(items, back, computed_classes == set(seen))


def theta_equals_pi_phi(ts: ThetaSystem) -> bool:
    """(pi tensor 1) o phi == theta on every z-ring variable."""
    return compose(pi_map(ts.n, units=True), ts.phi).images == ts.theta.images
