import pytest
from hypothesis import given, strategies as st

from splitvar.cyclotomic import CycloNum, zeta_pow
from splitvar.eigenbasis import (
    build_eigensystem,
    diagram_commutes,
    eigen_project,
    monomial_weight,
    p_of,
    unit_weights,
    v_ring,
    weight_decomposition,
)
from splitvar.heisenberg import E12, E23, sigma_action, sigma_ring
from splitvar.polyring import LaurentPoly, apply_map, compose, identity_map
from splitvar.reference_n3 import (
    EIGENVECTORS_N3,
    EXAMPLE_H,
    EXAMPLE_PROJECTIONS,
    EXAMPLE_TORIC,
    UNIT_WEIGHTS_N3,
)
from splitvar.veronese import toric_ideal, w_ring


def same_up_to_scalar(f, g):
    if not f or not g or set(f.terms) != set(g.terms):
        return False
    e = next(iter(f.terms))
    c = g.terms[e] / f.terms[e]
    return f.scale(c) == g


@pytest.mark.parametrize("n", [2, 3, 5])
def test_eigen_property(n):
    es = build_eigensystem(n)
    s12, s23 = sigma_action(E12(n)), sigma_action(E23(n))
    for v in es.vectors:
        m, k = v.weight
        assert apply_map(s12, v.vector) == v.vector.scale(zeta_pow(n, m))
        assert apply_map(s23, v.vector) == v.vector.scale(zeta_pow(n, k))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_change_of_basis_is_invertible(n):
    es = build_eigensystem(n)
    assert compose(es.p_inv, es.p).images == identity_map(es.p.source).images
    assert compose(es.p, es.p_inv).images == identity_map(es.p_inv.source).images
    assert diagram_commutes(es)


def test_composite_rejected():
    with pytest.raises(ValueError):
        build_eigensystem(4)


def test_n3_table():
    es = build_eigensystem(3)
    xr = sigma_ring(3)
    assert len(es.vectors) == 10
    for text, m, k in EIGENVECTORS_N3:
        row = xr.parse(text)
        hits = [v for v in es.vectors if same_up_to_scalar(v.vector, row)]
        assert len(hits) == 1
        assert hits[0].weight == (m, k)
    assert unit_weights(3) == UNIT_WEIGHTS_N3


def test_n3_labelling_normalised_to_trailing_one():
    es = build_eigensystem(3)
    xr = sigma_ring(3)
    assert es.vectors[0].vector == xr.parse("x1^3 + x2^3 + x3^3")
    assert es.vectors[4].vector == xr.parse("zeta^2*x1^2*x3 + zeta*x2^2*x1 + x3^2*x2")
    assert es.vectors[9].vector == xr.parse("x1*x2*x3")


def test_worked_example_h_exact():
    es = build_eigensystem(3)
    u = w_ring(3).parse(EXAMPLE_TORIC)
    h = p_of(u, es)
    assert h == v_ring(3).parse(EXAMPLE_H)
    parts = weight_decomposition(h, es)
    assert set(parts) == set(EXAMPLE_PROJECTIONS)
    for w, text in EXAMPLE_PROJECTIONS.items():
        assert same_up_to_scalar(parts[w], v_ring(3).parse(text))
        assert parts[w].scale(CycloNum.scalar(3, 9)) == v_ring(3).parse(text)


@pytest.mark.parametrize("n", [2, 3])
def test_equivariance_transport(n):
    es = build_eigensystem(n)
    for u in toric_ideal(n):
        for w, part in weight_decomposition(p_of(u, es), es).items():
            assert apply_map(es.pi_prime, part).is_zero()
            assert eigen_project(p_of(u, es), w, es) == part


@st.composite
def v_poly(draw):
    es = build_eigensystem(3)
    ring = v_ring(3)
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        e = tuple(draw(st.integers(0, 2)) for _ in range(es.N)) + (
            draw(st.integers(-2, 2)),
            draw(st.integers(-2, 2)),
        )
        terms[e] = CycloNum(3, [draw(st.integers(-4, 4)), draw(st.integers(-4, 4))])
    return LaurentPoly(ring, terms)


@given(v_poly())
def test_projection_partition(f):
    es = build_eigensystem(3)
    parts = [eigen_project(f, (m, k), es) for m in range(3) for k in range(3)]
    total = v_ring(3).zero()
    seen = set()
    for p in parts:
        assert not (set(p.terms) & seen)
        seen |= set(p.terms)
        total = total + p
    assert total == f


@given(v_poly())
def test_weight_is_the_sigma_eigenvalue(f):
    es = build_eigensystem(3)
    s12 = sigma_action(E12(3))
    for w, part in weight_decomposition(f, es).items():
        image = apply_map(es.pi_prime, part)
        assert apply_map(s12, image) == image.scale(zeta_pow(3, w[0]))
        assert all(monomial_weight(e, es) == w for e in part.terms)
