"""Laurent polynomial rings over Q(zeta_n), ring maps, and a Groebner engine.

A ``RingSpec`` names the variables of a ring and marks some of them as units.
``LaurentPoly`` values are immutable dictionaries from exponent tuples to
nonzero ``CycloNum`` coefficients.  Ideal computations polynomialize the ring
by adjoining a companion ``u_inv`` for every unit ``u`` together with the
relation ``u*u_inv - 1``; membership in the Laurent ideal is then ordinary
membership in the enlarged polynomial ideal.
"""

from __future__ import annotations

import ast
import heapq
from dataclasses import dataclass, field
from itertools import count
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycloNum, zeta_pow

__all__ = [
    "RingSpec",
    "LaurentPoly",
    "RingMap",
    "GroebnerBasis",
    "RingMismatchError",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "apply_map",
    "compose",
    "identity_map",
    "groebner",
    "normal_form",
    "ideal_equal",
    "ideal_contains",
    "grevlex_key",
    "parse_poly",
    "to_polynomial",
]

GREVLEX = "grevlex"


class RingMismatchError(ValueError):
    """Raised when polynomials or maps from different rings are combined."""


def grevlex_key(exps: Sequence[int]):
    """Sort key realising graded reverse lexicographic order (larger is bigger)."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class RingSpec:
    """Variables of a (Laurent) polynomial ring over Q(zeta_n)."""

    variables: tuple[str, ...]
    invertible: tuple[str, ...] = ()
    coeff_order: int = 3

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "invertible", tuple(self.invertible))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        missing = set(self.invertible) - set(self.variables)
        if missing:
            raise ValueError(f"invertible variables {sorted(missing)} not in ring")
        if self.coeff_order < 2:
            raise ValueError("coefficient field needs n >= 2")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self.variables}") from None

    @property
    def unit_mask(self) -> tuple[bool, ...]:
        inv = set(self.invertible)
        return tuple(v in inv for v in self.variables)

    # -- constructors --------------------------------------------------------

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c) -> "LaurentPoly":
        c = _as_coeff(self.coeff_order, c)
        if not c:
            return self.zero()
        return LaurentPoly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "LaurentPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return LaurentPoly(self, {tuple(e): CycloNum.one(self.coeff_order)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return LaurentPoly(self, {tuple(exps): _as_coeff(self.coeff_order, coeff)})

    def gens(self) -> dict[str, "LaurentPoly"]:
        return {v: self.var(v) for v in self.variables}

    def zeta(self, k: int = 1) -> CycloNum:
        return zeta_pow(self.coeff_order, k)

    def parse(self, text: str) -> "LaurentPoly":
        return parse_poly(text, self)

    def polynomialized(self) -> "RingSpec":
        """Ordinary polynomial ring with a companion ``u_inv`` after each unit."""
        names = []
        for v in self.variables:
            names.append(v)
            if v in self.invertible:
                names.append(f"{v}_inv")
        return RingSpec(tuple(names), (), self.coeff_order)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "invertible": list(self.invertible),
            "coeff_order": self.coeff_order,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RingSpec":
        return cls(tuple(data["variables"]), tuple(data["invertible"]), data["coeff_order"])


def _as_coeff(order: int, c) -> CycloNum:
    if isinstance(c, CycloNum):
        if c.order != order:
            raise RingMismatchError(f"coefficient in Q(zeta_{c.order}), ring over Q(zeta_{order})")
        return c
    if isinstance(c, (int, Rational)):
        return CycloNum.scalar(order, c)
    raise TypeError(f"cannot use {c!r} as a coefficient")


def _add_term(terms: dict, e, c) -> None:
    old = terms.get(e)
    if old is None:
        terms[e] = c
    else:
        s = old + c
        if s:
            terms[e] = s
        else:
            del terms[e]


class LaurentPoly:
    """Immutable polynomial over Q(zeta_n) with unit variables allowing negative exponents."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple, CycloNum], check: bool = False):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None
        if check:
            mask = ring.unit_mask
            for e in self.terms:
                if len(e) != ring.nvars:
                    raise ValueError(f"exponent {e} has wrong length for {ring.variables}")
                for k, u in zip(e, mask):
                    if k < 0 and not u:
                        raise ValueError(f"negative exponent on non-unit variable in {e}")

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_unit_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e,) = self.terms
        return all(k == 0 or u for k, u in zip(e, self.ring.unit_mask))

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.variables} vs {other.ring.variables}"
            )

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Rational, CycloNum)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            _add_term(terms, e, c)
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, CycloNum)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add_term(terms, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return LaurentPoly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = _as_coeff(self.ring.coeff_order, c)
        if not c:
            return self.ring.zero()
        return LaurentPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def inverse_unit(self) -> "LaurentPoly":
        if not self.is_unit_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        ((e, c),) = self.terms.items()
        return LaurentPoly(self.ring, {tuple(-k for k in e): c.inverse()})

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, CycloNum)):
            return self.scale(_as_coeff(self.ring.coeff_order, other).inverse())
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.is_constant() and other.terms:
            return self.scale(next(iter(other.terms.values())).inverse())
        return self * other.inverse_unit()

    def __rtruediv__(self, other):
        return self.ring.const(other) / self if not isinstance(other, LaurentPoly) else other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_unit() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Rational, CycloNum)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- structure -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, CycloNum]]:
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def lead_term(self) -> tuple[tuple, CycloNum]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def monic(self) -> "LaurentPoly":
        if not self.terms:
            return self
        return self.scale(self.lead_term()[1].inverse())

    def coefficient(self, exps: Sequence[int]) -> CycloNum:
        return self.terms.get(tuple(exps), CycloNum.zero(self.ring.coeff_order))

    def degree_in(self, name: str) -> tuple[int, int]:
        """(min, max) exponent of one variable over all terms."""
        i = self.ring.index(name)
        ks = [e[i] for e in self.terms] or [0]
        return min(ks), max(ks)

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(v for v, k in zip(self.ring.variables, e) if k)
        return used

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def evaluate(self, values: Sequence, one=1, inv=None):
        """Evaluate at ``values`` (one per variable) in any commutative ring.

        Coefficients are passed through unchanged, so callers evaluating over a
        prime field should first map coefficients with ``map_coefficients``.
        ``inv`` inverts unit values when negative exponents occur.
        """
        total = None
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k > 0:
                    t = t * v**k
                elif k < 0:
                    iv = inv(v) if inv is not None else 1 / v
                    t = t * iv ** (-k)
            total = t if total is None else total + t
        return total if total is not None else one * 0

    # -- formatting / serialization -----------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, symbol: str = "zeta") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = _format_monomial(self.ring.variables, e)
            neg = False
            if c.is_rational():
                r = c.rational()
                neg = r < 0
                r = abs(r)
                coeff = "" if (r == 1 and mono) else str(r)
            else:
                coeff = f"({c.format(symbol)})"
            if coeff and mono:
                body = f"{coeff}*{mono}"
            else:
                body = coeff or mono
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "terms": [
                {"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping, ring: RingSpec | None = None) -> "LaurentPoly":
        ring = ring or RingSpec.from_json(data["ring"])
        terms = {
            tuple(t["exps"]): CycloNum.from_json(ring.coeff_order, t["coeff"])
            for t in data["terms"]
        }
        return cls(ring, terms, check=True)


def _format_monomial(names: Sequence[str], e: Sequence[int]) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}" if k > 0 else f"{v}^({k})")
    return "*".join(parts)


# -- parsing -----------------------------------------------------------------


def parse_poly(text: str, ring: RingSpec, symbol: str = "zeta") -> LaurentPoly:
    """Parse an arithmetic expression in the ring's variables and ``zeta``.

    Accepts ``+ - * / ^ **`` and parentheses; division is allowed by nonzero
    constants and by unit monomials.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    zeta_val = ring.const(ring.zeta(1))
    names = set(ring.variables)

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return ring.const(node.value)
        if isinstance(node, ast.Name):
            if node.id == symbol:
                return zeta_val
            if node.id in names:
                return ring.var(node.id)
            raise ValueError(f"unknown symbol {node.id!r}")
        if isinstance(node, ast.UnaryOp):
            val = walk(node.operand)
            if isinstance(node.op, ast.USub):
                return -val
            if isinstance(node.op, ast.UAdd):
                return val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                k = _int_literal(node.right)
                return walk(node.left) ** k
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        raise ValueError(f"unsupported syntax in {text!r}: {ast.dump(node)}")

    return walk(tree)


def _int_literal(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_literal(node.operand)
    raise ValueError("exponents must be integer literals")


# -- functional arithmetic surface -------------------------------------------


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    f._check(g)
    return f * g


def poly_scale(f: LaurentPoly, c) -> LaurentPoly:
    return f.scale(c)


# -- ring maps ---------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    """Substitution homomorphism ``source -> target`` given by variable images."""

    source: RingSpec
    target: RingSpec
    images: tuple[LaurentPoly, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.nvars:
            raise ValueError(
                f"{len(self.images)} images for {self.source.nvars} source variables"
            )
        if self.source.coeff_order != self.target.coeff_order:
            raise RingMismatchError("source and target have different coefficient fields")
        for v, img, unit in zip(self.source.variables, self.images, self.source.unit_mask):
            if img.ring != self.target:
                raise RingMismatchError(f"image of {v} does not live in the target ring")
            if unit and not img.is_unit_monomial():
                raise ValueError(f"unit {v} must map to a unit monomial, got {img}")

    @classmethod
    def from_dict(cls, source: RingSpec, target: RingSpec, images: Mapping, name: str = ""):
        imgs = []
        for v in source.variables:
            img = images[v]
            if isinstance(img, str):
                img = target.parse(img)
            elif not isinstance(img, LaurentPoly):
                img = target.const(img)
            imgs.append(img)
        return cls(source, target, tuple(imgs), name)

    def image_of(self, name: str) -> LaurentPoly:
        return self.images[self.source.index(name)]

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        return apply_map(self, f)


def apply_map(m: RingMap, f: LaurentPoly) -> LaurentPoly:
    if f.ring != m.source:
        raise RingMismatchError(
            f"map source {m.source.variables} does not match {f.ring.variables}"
        )
    target = m.target
    powers: dict[tuple[int, int], LaurentPoly] = {}

    def power(i: int, k: int) -> LaurentPoly:
        key = (i, k)
        p = powers.get(key)
        if p is None:
            if k < 0:
                p = power(i, -k).inverse_unit()
            elif k == 1:
                p = m.images[i]
            else:
                p = power(i, k // 2) * power(i, k - k // 2)
            powers[key] = p
        return p

    terms: dict = {}
    for e, c in f.terms.items():
        t = None
        for i, k in enumerate(e):
            if k:
                t = power(i, k) if t is None else t * power(i, k)
        if t is None:
            _add_term(terms, (0,) * target.nvars, c)
        else:
            for te, tc in t.terms.items():
                _add_term(terms, te, tc * c)
    return LaurentPoly(target, terms)


def compose(m2: RingMap, m1: RingMap) -> RingMap:
    """The map ``f -> m2(m1(f))``."""
    if m1.target != m2.source:
        raise RingMismatchError("cannot compose: m1.target != m2.source")
    name = f"{m2.name}o{m1.name}" if m1.name and m2.name else ""
    return RingMap(m1.source, m2.target, tuple(apply_map(m2, g) for g in m1.images), name)


def identity_map(ring: RingSpec) -> RingMap:
    return RingMap(ring, ring, tuple(ring.var(v) for v in ring.variables), "id")


# -- Groebner machinery ------------------------------------------------------
#
# The engine works on plain dicts {exponent tuple: CycloNum} in the
# polynomialized ring; all exponents there are >= 0.


def _polynomialize(f: LaurentPoly, big: RingSpec) -> dict:
    mask = f.ring.unit_mask
    out = {}
    for e, c in f.terms.items():
        ne = []
        for k, u in zip(e, mask):
            if u:
                ne.extend((k, 0) if k >= 0 else (0, -k))
            else:
                ne.append(k)
        out[tuple(ne)] = c
    return out


def to_polynomial(f: LaurentPoly) -> LaurentPoly:
    """Rewrite ``f`` in the polynomialized ring, u^-k becoming u_inv^k."""
    big = f.ring.polynomialized()
    return LaurentPoly(big, _polynomialize(f, big))


def _laurentize(terms: Mapping, ring: RingSpec) -> LaurentPoly:
    mask = ring.unit_mask
    out: dict = {}
    for e, c in terms.items():
        ne = []
        i = 0
        for u in mask:
            if u:
                ne.append(e[i] - e[i + 1])
                i += 2
            else:
                ne.append(e[i])
                i += 1
        _add_term(out, tuple(ne), c)
    return LaurentPoly(ring, out)


def _unit_relations(ring: RingSpec, big: RingSpec) -> list[dict]:
    rels = []
    one = CycloNum.one(ring.coeff_order)
    for u in ring.invertible:
        i = big.index(u)
        e = [0] * big.nvars
        e[i] = e[i + 1] = 1
        rels.append({tuple(e): one, (0,) * big.nvars: -one})
    return rels


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Poly:
    """Monic basis element cached with its leading monomial and sorted tail."""

    __slots__ = ("lm", "terms", "tail", "sugar")

    def __init__(self, terms: dict, key, sugar: int):
        self.terms = terms
        ordered = sorted(terms.items(), key=lambda t: key(t[0]), reverse=True)
        self.lm = ordered[0][0]
        self.tail = ordered[1:]
        self.sugar = sugar


class _Engine:
    def __init__(self, nvars: int):
        self.nvars = nvars
        self._keys: dict = {}

    def key(self, e: tuple):
        k = self._keys.get(e)
        if k is None:
            k = grevlex_key(e)
            self._keys[e] = k
        return k

    def lead(self, terms: dict) -> tuple:
        return max(terms, key=self.key)

    def make(self, terms: dict, sugar: int | None = None) -> _Poly:
        lm = self.lead(terms)
        inv = terms[lm].inverse()
        if not inv.is_one():
            terms = {e: c * inv for e, c in terms.items()}
        if sugar is None:
            sugar = max(sum(e) for e in terms)
        return _Poly(terms, self.key, sugar)

    def find_reducer(self, m: tuple, basis: Sequence[_Poly]) -> _Poly | None:
        for g in basis:
            if _divides(g.lm, m):
                return g
        return None

    def reduce(self, terms: dict, basis: Sequence[_Poly], full: bool = True) -> dict:
        """Normal form of ``terms`` modulo monic ``basis`` (top-only if not full)."""
        f = dict(terms)
        rem: dict = {}
        key = self.key
        # max-heap of candidate monomials; stale entries are skipped
        heap = [(_neg(key(e)), e) for e in f]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = f.get(m)
            if c is None:
                continue
            if heap and heap[0][1] == m:
                continue
            g = self.find_reducer(m, basis)
            if g is None:
                if not full:
                    rem.update(f)
                    return rem
                rem[m] = c
                del f[m]
                continue
            del f[m]
            q = tuple(x - y for x, y in zip(m, g.lm))
            for e, gc in g.tail:
                ne = tuple(x + y for x, y in zip(e, q))
                old = f.get(ne)
                if old is None:
                    f[ne] = -(c * gc)
                    heapq.heappush(heap, (_neg(key(ne)), ne))
                else:
                    s = old - c * gc
                    if s:
                        f[ne] = s
                    else:
                        del f[ne]
        return rem

    def spoly(self, f: _Poly, g: _Poly) -> tuple[dict, int]:
        lcm = _lcm(f.lm, g.lm)
        qf = tuple(x - y for x, y in zip(lcm, f.lm))
        qg = tuple(x - y for x, y in zip(lcm, g.lm))
        out: dict = {}
        for e, c in f.tail:
            out[tuple(x + y for x, y in zip(e, qf))] = c
        for e, c in g.tail:
            ne = tuple(x + y for x, y in zip(e, qg))
            old = out.get(ne)
            if old is None:
                out[ne] = -c
            else:
                s = old - c
                if s:
                    out[ne] = s
                else:
                    del out[ne]
        sugar = max(f.sugar + sum(qf), g.sugar + sum(qg))
        return out, sugar

    def buchberger(self, gens: Iterable[dict]) -> list[_Poly]:
        polys: list[_Poly] = []
        active: list[int] = []
        pairs: list = []  # heap of (sugar, key(lcm), tiebreak, i, j)
        tick = count()

        def update(h_idx: int) -> None:
            nonlocal active, pairs
            h = polys[h_idx]
            cand = []
            for i in active:
                cand.append((i, _lcm(h.lm, polys[i].lm)))
            # Gebauer-Moeller: drop new pairs whose lcm is a multiple of another's
            keep = []
            for idx, (i, l) in enumerate(cand):
                if _disjoint(h.lm, polys[i].lm):
                    keep.append((i, l, True))
                    continue
                dominated = False
                for jdx, (j, l2) in enumerate(cand):
                    if jdx != idx and _divides(l2, l) and (l2 != l or jdx < idx):
                        dominated = True
                        break
                if not dominated:
                    keep.append((i, l, False))
            new_pairs = [(i, l) for i, l, coprime in keep if not coprime]
            # drop old pairs (i, j) whose lcm is strictly covered through h
            kept_old = []
            for entry in pairs:
                _, _, _, i, j, l = entry
                if (
                    _divides(h.lm, l)
                    and _lcm(polys[i].lm, h.lm) != l
                    and _lcm(polys[j].lm, h.lm) != l
                ):
                    continue
                kept_old.append(entry)
            pairs = kept_old
            for i, l in new_pairs:
                g = polys[i]
                sugar = max(
                    h.sugar + sum(l) - sum(h.lm), g.sugar + sum(l) - sum(g.lm)
                )
                pairs.append((sugar, self.key(l), next(tick), i, h_idx, l))
            heapq.heapify(pairs)
            active = [i for i in active if not _divides(h.lm, polys[i].lm)]
            active.append(h_idx)

        def basis():
            return [polys[i] for i in active]

        for g in sorted(gens, key=lambda t: self.key(self.lead(t)) if t else (0,)):
            if not g:
                continue
            r = self.reduce(g, basis(), full=False)
            if r:
                polys.append(self.make(r))
                update(len(polys) - 1)

        while pairs:
            _, _, _, i, j, _ = heapq.heappop(pairs)
            s, sugar = self.spoly(polys[i], polys[j])
            if not s:
                continue
            r = self.reduce(s, basis(), full=False)
            if r:
                polys.append(self.make(r, sugar))
                update(len(polys) - 1)
        return self.interreduce(basis())

    def interreduce(self, basis: list[_Poly]) -> list[_Poly]:
        basis = sorted(basis, key=lambda p: self.key(p.lm))
        minimal = []
        for p in basis:
            if not any(_divides(q.lm, p.lm) for q in minimal):
                minimal.append(p)
        out = []
        for p in minimal:
            others = [q for q in minimal if q is not p]
            tail = self.reduce(dict(p.tail), others, full=True)
            tail[p.lm] = p.terms[p.lm]
            out.append(_Poly(tail, self.key, p.sugar))
        out.sort(key=lambda p: self.key(p.lm), reverse=True)
        return out


def _neg(k):
    # invert a grevlex key for use in a min-heap
    return (-k[0], tuple(-x for x in k[1]))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of a Laurent ideal in its polynomialized ring."""

    ring: RingSpec
    order: str
    poly_ring: RingSpec
    basis: tuple[LaurentPoly, ...]

    def __len__(self):
        return len(self.basis)

    def is_unit_ideal(self) -> bool:
        return any(b.is_constant() for b in self.basis)

    def laurent_basis(self) -> list[LaurentPoly]:
        """Basis elements pushed back into the Laurent ring (companions become inverses)."""
        out = []
        for b in self.basis:
            f = _laurentize(b.terms, self.ring)
            if f:
                out.append(f)
        return out

    def _engine_basis(self, eng: _Engine) -> list[_Poly]:
        return [_Poly(dict(b.terms), eng.key, 0) for b in self.basis]


def groebner(gens: Sequence[LaurentPoly], order: str = GREVLEX, ring: RingSpec | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    if order != GREVLEX:
        raise ValueError(f"unsupported monomial order {order!r}")
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    big = ring.polynomialized()
    eng = _Engine(big.nvars)
    inputs = _unit_relations(ring, big) + [_polynomialize(g, big) for g in gens if g]
    polys = eng.buchberger(inputs)
    basis = tuple(LaurentPoly(big, p.terms) for p in polys)
    return GroebnerBasis(ring, order, big, basis)


def normal_form(f: LaurentPoly, gb: GroebnerBasis) -> LaurentPoly:
    """Remainder of ``f`` on division by ``gb``; zero exactly for ideal members."""
    if f.ring != gb.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    eng = _Engine(gb.poly_ring.nvars)
    rem = eng.reduce(_polynomialize(f, gb.poly_ring), gb._engine_basis(eng), full=True)
    return _laurentize(rem, gb.ring)


def ideal_contains(gb: GroebnerBasis, fs: Iterable[LaurentPoly]) -> list[bool]:
    eng = _Engine(gb.poly_ring.nvars)
    basis = gb._engine_basis(eng)
    return [
        not eng.reduce(_polynomialize(f, gb.poly_ring), basis, full=True) for f in fs
    ]


def ideal_equal(gens_a: Sequence[LaurentPoly], gens_b: Sequence[LaurentPoly], ring: RingSpec | None = None) -> bool:
    """True iff both generator lists span the same ideal."""
    ring = ring or (gens_a[0].ring if gens_a else gens_b[0].ring)
    gb_a = groebner(gens_a, ring=ring)
    if not all(ideal_contains(gb_a, gens_b)):
        return False
    gb_b = groebner(gens_b, ring=ring)
    return all(ideal_contains(gb_b, gens_a))
