"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced
modulo the n-th cyclotomic polynomial.  Internally a value is an integer
numerator vector over one positive common denominator, which keeps the hot
arithmetic paths on machine-friendly Python ints; the public ``coeffs`` view
exposes the same value as a tuple of ``Fraction`` objects.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "CycloNum",
    "cyclotomic_poly",
    "totient",
    "zeta_pow",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_neg",
    "cyclo_inv",
    "cyclo_to_prime_field",
    "primitive_root_of_unity",
    "is_prime",
]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # integer polynomial exact division, coefficients low degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Uses x^n - 1 = prod_{d | n} Phi_d.
    """
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # power-basis vectors of zeta^k for 0 <= k < 2*phi(n) - 1
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = gcd(den, *num)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycloNum:
    """An element of Q(zeta_n) in canonical reduced form.

    >>> z = CycloNum.zeta(3)
    >>> z * z
    CycloNum(3, [-1, -1])
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs=(0,)):
        if order < 2:
            raise ValueError(f"cyclotomic order must be >= 2, got {order}")
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        self.order = order
        self._num, self._den = _normalize(_reduce_ints(order, ints), den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> "CycloNum":
        obj = object.__new__(cls)
        obj.order = order
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, order: int, value) -> "CycloNum":
        value = Fraction(value)
        deg = len(cyclotomic_poly(order)) - 1
        num = [0] * deg
        num[0] = value.numerator
        return cls._raw(order, tuple(num), value.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.scalar(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.scalar(order, 1)

    @classmethod
    def zeta(cls, order: int) -> "CycloNum":
        return zeta_pow(order, 1)

    # -- views ---------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_one(self) -> bool:
        return self._den == 1 and self._num[0] == 1 and not any(self._num[1:])

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __bool__(self) -> bool:
        return any(self._num)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: Q(zeta_{self.order}) vs Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.scalar(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            num, den = _normalize(num, d1)
        else:
            num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
            num, den = _normalize(num, d1 * d2)
        return CycloNum._raw(self.order, num, den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.order, tuple(-a for a in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, other._num
        deg = len(a)
        if deg == 1:
            return CycloNum._raw(
                self.order, *_normalize([a[0] * b[0]], self._den * other._den)
            )
        if not any(b[1:]):
            b0 = b[0]
            num = [x * b0 for x in a]
        elif not any(a[1:]):
            a0 = a[0]
            num = [x * a0 for x in b]
        else:
            prod = [0] * (2 * deg - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] += ai * bj
            num = prod[:deg]
            table = _reduction_table(self.order)
            for k in range(deg, 2 * deg - 1):
                c = prod[k]
                if c:
                    row = table[k]
                    for j in range(deg):
                        num[j] += c * row[j]
        return CycloNum._raw(self.order, *_normalize(num, self._den * other._den))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        num, den = self._num, self._den
        if len(num) == 1 or not any(num[1:]):
            # rational: (c/d)^-1 = d/c
            out = [0] * len(num)
            out[0] = den
            return CycloNum._raw(self.order, *_normalize(out, num[0]))
        if len(num) == 2:
            # quadratic: multiply by the Galois conjugate
            phi = cyclotomic_poly(self.order)
            q, p = phi[0], phi[1]
            c0, c1 = num
            norm = c0 * c0 - p * c0 * c1 + q * c1 * c1
            out = [den * (c0 - p * c1), -den * c1]
            return CycloNum._raw(self.order, *_normalize(out, norm))
        inv = _poly_inverse_mod(list(self.coeffs), list(cyclotomic_poly(self.order)))
        return CycloNum(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return (
                self.order == other.order
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    # -- conversions ---------------------------------------------------------

    def to_prime_field(self, q: int, root: int) -> int:
        return cyclo_to_prime_field(self, q, root)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, order: int, data) -> "CycloNum":
        return cls(order, [Fraction(s) for s in data])

    def __repr__(self):
        return f"CycloNum({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        return self.format()

    def format(self, symbol: str = "zeta") -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            mono = symbol if k == 1 else f"{symbol}^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text


def _reduce_ints(order: int, ints: list[int]) -> list[int]:
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    ints = list(ints) + [0] * max(0, deg - len(ints))
    for k in range(len(ints) - 1, deg - 1, -1):
        c = ints[k]
        if c:
            ints[k] = 0
            for j in range(deg + 1):
                ints[k - deg + j] -= c * phi[j]
    return ints[:deg]


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_inverse_mod(f: list[Fraction], m: list[int]) -> list[Fraction]:
    # extended Euclid over Q: find s with s*f = 1 mod m
    r0, r1 = [Fraction(c) for c in m], _poly_trim([Fraction(c) for c in f])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(_poly_trim(list(r1))) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    c = r1[0]
    return [x / c for x in s1]


# -- functional surface ------------------------------------------------------


def zeta_pow(n: int, k: int) -> CycloNum:
    """Canonical form of zeta_n^k."""
    if n < 2:
        raise ValueError(f"zeta_pow needs n >= 2, got {n}")
    k %= n
    table = _reduction_table(n)
    if k < len(table):
        return CycloNum._raw(n, table[k], 1)
    ints = [0] * (k + 1)
    ints[k] = 1
    return CycloNum._raw(n, tuple(_reduce_ints(n, ints)), 1)


def cyclo_add(x: CycloNum, y: CycloNum) -> CycloNum:
    return x + y


def cyclo_mul(x: CycloNum, y: CycloNum) -> CycloNum:
    return x * y


def cyclo_neg(x: CycloNum) -> CycloNum:
    return -x


def cyclo_inv(x: CycloNum) -> CycloNum:
    return x.inverse()


@lru_cache(maxsize=None)
def _check_root(q: int, n: int, root: int) -> None:
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if (q - 1) % n:
        raise ValueError(f"F_{q} has no root of unity of order {n} (q != 1 mod {n})")
    root %= q
    if pow(root, n, q) != 1:
        raise ValueError(f"{root} is not a root of unity of order dividing {n} mod {q}")
    for d in _divisors(n)[:-1]:
        if pow(root, d, q) == 1:
            raise ValueError(f"{root} has order dividing {d} mod {q}, not primitive")


@lru_cache(maxsize=None)
def primitive_root_of_unity(q: int, n: int) -> int:
    """Smallest r in 2..q-1 that is a primitive n-th root of unity mod q."""
    if not is_prime(q) or (q - 1) % n:
        raise ValueError(f"F_{q} has no root of unity of order {n}")
    for r in range(2, q):
        if pow(r, n, q) == 1 and all(pow(r, d, q) != 1 for d in _divisors(n)[:-1]):
            return r
    raise ValueError(f"no root of unity of order {n} mod {q}")


def cyclo_to_prime_field(x: CycloNum, q: int, root: int) -> int:
    """Image of x in F_q under zeta -> root."""
    _check_root(q, x.order, root)
    if x._den % q == 0:
        raise ZeroDivisionError(f"denominator {x._den} vanishes mod {q}")
    acc = 0
    for c in reversed(x._num):
        acc = (acc * root + c) % q
    return acc * pow(x._den, -1, q) % q
