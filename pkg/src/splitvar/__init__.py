"""Exact symbolic pipeline for the splitting variety X(a, b) of Heisenberg-group torsors.

Bottom to top: cyclotomic arithmetic, Laurent polynomial rings with a Groebner
engine, the Heisenberg action, the Veronese toric ideal, the eigenbasis
change of coordinates, the kernel of theta, and point search on X(a, b).
"""

from .cyclotomic import CycloNum, cyclotomic_poly, primitive_root_of_unity, zeta_pow
from .eigenbasis import EigenSystem, WeightedVector, build_eigensystem
from .heisenberg import GroupElement, induced_rep, is_fixed, sigma_action
from .polyring import LaurentPoly, RingMap, RingSpec, groebner, ideal_equal, normal_form
from .splitkernel import (
    ThetaSystem,
    WeightedIdeal,
    build_theta,
    crosscheck_reference,
    generate,
    kernel_generators,
    verify_kernel,
)
from .variety import CyclotomicField, PrimeField, find_point, is_on_variety, specialize, theta_point
from .veronese import sym_basis, toric_ideal

__all__ = [
    "CycloNum",
    "cyclotomic_poly",
    "primitive_root_of_unity",
    "zeta_pow",
    "EigenSystem",
    "WeightedVector",
    "build_eigensystem",
    "GroupElement",
    "induced_rep",
    "is_fixed",
    "sigma_action",
    "LaurentPoly",
    "RingMap",
    "RingSpec",
    "groebner",
    "ideal_equal",
    "normal_form",
    "ThetaSystem",
    "WeightedIdeal",
    "build_theta",
    "crosscheck_reference",
    "generate",
    "kernel_generators",
    "verify_kernel",
    "CyclotomicField",
    "PrimeField",
    "find_point",
    "is_on_variety",
    "specialize",
    "theta_point",
    "sym_basis",
    "toric_ideal",
]
