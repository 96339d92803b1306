"""Text renderings of pipeline results (JSON and a plain CAS-readable format)."""

from __future__ import annotations

import json

from .cyclotomic import cyclotomic_poly
from .eigenbasis import EigenSystem, unit_weights
from .polyring import LaurentPoly, RingSpec, to_polynomial

__all__ = ["dumps_json", "minpoly_text", "cas_text", "eigenbasis_json", "eigenbasis_text"]


def dumps_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def minpoly_text(n: int, symbol: str = "zeta") -> str:
    ring = RingSpec((symbol,), (), 2)
    poly = ring.zero()
    for k, c in enumerate(cyclotomic_poly(n)):
        if c:
            poly = poly + ring.monomial((k,), c)
    return poly.format()


def cas_text(polys: list[LaurentPoly], ring: RingSpec, title: str) -> str:
    """Polynomial generators with inverses spelled as u_inv plus the relations u*u_inv - 1."""
    big = ring.polynomialized()
    lines = [
        f"# {title}",
        f"# coefficients: Q(zeta), zeta a root of {minpoly_text(ring.coeff_order)}",
        f"# variables: {', '.join(big.variables)}",
    ]
    rels = [f"{u}*{u}_inv - 1" for u in ring.invertible]
    if rels:
        lines.append(f"# relations: {', '.join(rels)}")
    lines.append(f"# generators: {len(polys)}")
    lines += [to_polynomial(p).format() + ";" for p in polys]
    return "\n".join(lines) + "\n"


def eigenbasis_json(es: EigenSystem) -> dict:
    return {
        "n": es.n,
        "vectors": [
            {"name": f"v{i}", "vector": v.vector.format(), "terms": v.vector.to_json()["terms"],
             "weight": list(v.weight)}
            for i, v in enumerate(es.vectors, 1)
        ],
        "ring": es.vectors[0].vector.ring.to_json(),
        "unit_weights": {k: list(w) for k, w in unit_weights(es.n).items()},
    }


def eigenbasis_text(es: EigenSystem) -> str:
    lines = [f"# simultaneous (E12, E23) eigenbasis of Sym^{es.n} V; weight (m, k) = eigenvalues (zeta^m, zeta^k)"]
    for i, v in enumerate(es.vectors, 1):
        lines.append(f"v{i} = {v.vector.format()}    ({v.weight[0]}, {v.weight[1]})")
    for name, w in unit_weights(es.n).items():
        lines.append(f"{name}    ({w[0]}, {w[1]})")
    return "\n".join(lines) + "\n"
