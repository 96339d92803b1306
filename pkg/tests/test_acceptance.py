"""Acceptance gate: one check per criterion, each with its runtime budget.

Run with ``pytest tests/test_acceptance.py`` (the PASS/FAIL lines appear in
the terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import contextlib
import io
import itertools
import json
import random
import time

import pytest

from splitvar.cli import main as cli_main
from splitvar.eigenbasis import build_eigensystem, p_of, v_ring, weight_decomposition
from splitvar.heisenberg import E12, E13, E23, GroupElement, induced_rep, is_fixed, sigma_action, sigma_ring
from splitvar.polyring import LaurentPoly, RingSpec, apply_map, compose, identity_map, ideal_equal
from splitvar.reference_n3 import (
    EIGENVECTORS_N3,
    EXAMPLE_H,
    EXAMPLE_KERNEL,
    EXAMPLE_PROJECTIONS,
    EXAMPLE_TORIC,
    REFERENCE_TORIC_N3,
    UNIT_WEIGHTS_N3,
)
from splitvar.splitkernel import (
    WeightedIdeal,
    build_theta,
    crosscheck_reference,
    generate,
    normalize_generator,
    verify_kernel,
    z_ring,
)
from splitvar.variety import CyclotomicField, PrimeField, VarietyPoint, is_on_variety, random_theta_check, specialize
from splitvar.veronese import CATEGORY_SIZES_N3, classify_generators_n3, pi_map, sym_basis, w_ring

RESULTS: dict[int, tuple[bool, float, str]] = {}


def cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, json.loads(buf.getvalue())


def up_to_scalar(f, g):
    if not f or not g or set(f.terms) != set(g.terms):
        return False
    e = next(iter(f.terms))
    return f.scale(g.terms[e] / f.terms[e]) == g


def c1_toric():
    code, data = cli_json("toric", "--n", "3")
    ring = RingSpec.from_json(data["ring"])
    gens = [LaurentPoly.from_json({"terms": t}, ring) for t in data["terms"]]
    ref = [w_ring(3).parse(s) for s in REFERENCE_TORIC_N3]
    cats = classify_generators_n3(gens)
    counts = {c: sum(1 for v in cats.values() if v == c) for c in CATEGORY_SIZES_N3}
    ok = code == 0 and len(gens) == 27 and ideal_equal(gens, ref) and counts == {1: 3, 2: 3, 3: 6, 4: 12, 5: 3}
    return ok, f"{len(gens)} generators, categories {tuple(counts.values())}"


def c2_eigenbasis():
    code, data = cli_json("eigenbasis", "--n", "3")
    ring = RingSpec.from_json(data["ring"])
    vecs = [(LaurentPoly.from_json({"terms": v["terms"]}, ring), tuple(v["weight"])) for v in data["vectors"]]
    xr = sigma_ring(3)
    matched = 0
    for text, m, k in EIGENVECTORS_N3:
        hits = [w for v, w in vecs if up_to_scalar(v, xr.parse(text))]
        matched += hits == [(m, k)]
    units = {k: tuple(v) for k, v in data["unit_weights"].items()}
    ok = code == 0 and len(vecs) == 10 and matched == 10 and units == UNIT_WEIGHTS_N3
    return ok, f"{matched}/10 vectors, unit weights {'ok' if units == UNIT_WEIGHTS_N3 else units}"


def c3_example():
    es = build_eigensystem(3)
    h = p_of(w_ring(3).parse(EXAMPLE_TORIC), es)
    h_ok = h == v_ring(3).parse(EXAMPLE_H)
    parts = weight_decomposition(h, es)
    proj_ok = set(parts) == set(EXAMPLE_PROJECTIONS) and all(
        up_to_scalar(parts[w], v_ring(3).parse(t)) for w, t in EXAMPLE_PROJECTIONS.items()
    )
    ideal, _ = generate(3)
    toric_text = w_ring(3).parse(EXAMPLE_TORIC).format()
    emitted = {tuple(p["weight"]): g for g, p in zip(ideal.generators, ideal.provenance) if p["toric"] == toric_text}
    zr = z_ring(3)
    # unit scaling: both sides brought to the same unit-normal form
    kern_ok = set(emitted) == set(EXAMPLE_KERNEL) and all(
        normalize_generator(emitted[w], 10) == normalize_generator(zr.parse(t), 10) for w, t in EXAMPLE_KERNEL.items()
    )
    return h_ok and proj_ok and kern_ok, f"h {h_ok}, projections {proj_ok}, kernel elements {kern_ok}"


def c4_soundness():
    details = []
    ok = True
    for n in (3, 2):
        code, data = cli_json("generate", "--n", str(n))
        ideal = WeightedIdeal.from_json(data)
        rep = verify_kernel(ideal, build_theta(n))
        ok &= code == 0 and rep.passed
        details.append(f"n={n}: {len(ideal)} generators, {len(rep.failures)} nonzero residuals")
    return ok, "; ".join(details)


def c5_crosscheck():
    ideal, ts = generate(3)
    rep = crosscheck_reference(ts, ideal)
    data = rep.to_json()
    ok = rep.clean_items_in_computed and all(rep.computed_in_reference)
    return ok, (f"{data['items']} reference items ({data['distinct']} distinct), "
                f"theta-dirty {data['theta_dirty'] or 'none'}, mutual containment {ok}, "
                f"same unit classes {rep.same_unit_classes}")


def c6_random_eval():
    ideal, ts = generate(3)
    fails = {}
    for fld in (CyclotomicField(3), PrimeField(7, 3), PrimeField(13, 3)):
        fails[fld.name] = len(random_theta_check(ideal, fld, draws=200, seed=2024, theta_system=ts))
    return not any(fails.values()), f"failures per field {fails}"


def c7_points():
    ideal, _ = generate(3)
    got = []
    for a, b in itertools.product((1, 6), repeat=2):
        code, data = cli_json("find-point", "--q", "7", "--a", str(a), "--b", str(b))
        sv = specialize(ideal, a, b, PrimeField(7, 3))
        good = code == 0 and data["found"] and is_on_variety(VarietyPoint(tuple(data["point"])), sv)
        got.append(good)
    return all(got), f"{sum(got)}/4 pairs with verified points"


def c8_invariants():
    n = 3
    es = build_eigensystem(n)
    ts = build_theta(n, es)
    diagram = (
        compose(pi_map(n, True), ts.phi).images == ts.theta.images
        and compose(es.pi_prime, es.p).images == pi_map(n, True).images
        and compose(es.p_inv, es.p).images == identity_map(es.p.source).images
    )
    fixed = all(is_fixed(img) for img in ts.theta.images)
    xr = sigma_ring(n)
    s12, s23, s13 = (sigma_action(g(n)) for g in (E12, E23, E13))
    commute = center = True
    for e in sym_basis(n):
        m = xr.monomial(tuple(e) + (0, 0))
        commute &= apply_map(s12, apply_map(s23, m)) == apply_map(s23, apply_map(s12, m))
        center &= apply_map(s13, m) == m
    rho = induced_rep(n)
    rng = random.Random(100)
    hom = True
    for _ in range(100):
        g = GroupElement(n, *(rng.randrange(n) for _ in range(3)))
        h = GroupElement(n, *(rng.randrange(n) for _ in range(3)))
        hom &= rho(g * h) == rho(g) @ rho(h)
    ok = diagram and fixed and commute and center and hom
    return ok, f"diagram {diagram}, fixed {fixed}, commute {commute}, E13 trivial {center}, homomorphism {hom}"


CRITERIA = [
    (1, "toric reproduction", c1_toric, 5.0),
    (2, "eigenbasis reproduction", c2_eigenbasis, 1.0),
    (3, "worked example", c3_example, 1.0),
    (4, "kernel soundness", c4_soundness, 30.0),
    (5, "reference list crosscheck", c5_crosscheck, 60.0),
    (6, "randomized evaluation", c6_random_eval, 10.0),
    (7, "point production", c7_points, 5.0),
    (8, "structural invariants", c8_invariants, 10.0),
]


def run_criterion(num, fn, budget):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    within = elapsed <= budget
    RESULTS[num] = (ok and within, elapsed, detail + ("" if within else f"; over budget {budget}s"))
    return RESULTS[num]


def format_line(num):
    ok, elapsed, detail = RESULTS[num]
    name = next(c[1] for c in CRITERIA if c[0] == num)
    return f"criterion {num} {name}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}"


@pytest.mark.parametrize("num,name,fn,budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, budget):
    ok, _, _ = run_criterion(num, fn, budget)
    print(format_line(num))
    assert ok, format_line(num)


if __name__ == "__main__":
    for num, _, fn, budget in CRITERIA:
        run_criterion(num, fn, budget)
        print(format_line(num))
