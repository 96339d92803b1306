"""Hand-transcribed n = 3 reference data, kept for cross-checks only.

``REFERENCE_TORIC_N3`` is the 27-binomial generating set of ker(pi) and
``REFERENCE_KERNEL_N3`` the 79-item generator list for ker(theta), both in
their original order with duplicates kept.
"""

REFERENCE_TORIC_N3 = (
    "w8*w9 - w1*w10",
    "w7*w9 - w5*w10",
    "w5*w9 - w2*w10",
    "w3*w9 - w7*w10",
    "w1*w9 - w6*w10",
    "w8^2 - w3*w10",
    "w6*w8 - w5*w10",
    "w4*w8 - w10^2",
    "w1*w8 - w7*w10",
    "w6*w7 - w2*w8",
    "w4*w7 - w1*w10",
    "w1*w7 - w5*w8",
    "w6^2 - w2*w9",
    "w4*w6 - w9^2",
    "w3*w6 - w5*w8",
    "w1*w6 - w2*w10",
    "w5^2 - w2*w7",
    "w4*w5 - w6*w10",
    "w3*w5 - w7^2",
    "w1*w5 - w2*w8",
    "w3*w4 - w8*w10",
    "w2*w4 - w6*w9",
    "w1*w4 - w9*w10",
    "w2*w3 - w5*w7",
    "w1*w3 - w7*w8",
    "w1*w2 - w5*w6",
    "w1^2 - w5*w10",
)

# relation types with the examples named for each (w8^2 fixes an x/w slip)
REFERENCE_CATEGORY_EXAMPLES_N3 = {
    1: ("w5*w7 - w2*w3", "w6*w9 - w2*w4", "w8*w10 - w3*w4"),
    2: ("w5*w6 - w1*w2", "w7*w8 - w1*w3", "w9*w10 - w1*w4"),
    3: (
        "w5^2 - w2*w7",
        "w6^2 - w2*w9",
        "w7^2 - w3*w5",
        "w8^2 - w3*w10",
        "w9^2 - w4*w6",
        "w10^2 - w4*w8",
    ),
    5: ("w1^2 - w5*w10", "w1^2 - w6*w8", "w1^2 - w7*w9"),
}

REFERENCE_KERNEL_N3 = (
    "z7^2 - 1/a*z8*z9 - 3*z4*z10",
    "zeta^2/a*z8^2 - zeta^2*z7*z9 - 3*z6*z10",
    "zeta*z9^2 - zeta*z7*z8 - 3*z5*z10",
    "(1-zeta)*z4*z8 + (zeta^2-1)*z5*z7 + (zeta-zeta^2)*z6*z9",
    "(1-zeta^2)*z4*z9 + (zeta^2-zeta)/a*z5*z8 + (zeta-1)*z6*z7",
    "z7^2 - 1/a*z8*z9 - z1*z4 - zeta/a*z2*z6 - zeta^2/a*z3*z5",
    "zeta/a*z8^2 - zeta*z7*z9 - z1*z6 - zeta/a*z2*z5 - zeta^2*z3*z4",
    "zeta^2*z9^2 - zeta^2*z7*z8 - z1*z5 - zeta*z2*z4 - zeta^2*z3*z6",
    "z1*z7 + zeta^2/a*z2*z9 + zeta/a*z3*z8 - 1/b*z4^2 + 1/(a*b)*z5*z6",
    "z1*z8 + zeta^2*z2*z7 + zeta*z3*z9 - zeta/b*z6^2 + zeta/b*z4*z5",
    "z1*z9 + zeta^2/a*z2*z8 + zeta*z3*z7 - zeta^2/(a*b)*z5^2 + zeta^2/b*z4*z6",
    "1/b*z4^2 - 1/(a*b)*z5*z6 - 3*z7*z10",
    "zeta/(a*b)*z5^2 - zeta/b*z4*z6 - 3*z9*z10",
    "zeta^2/b*z6^2 - zeta^2/b*z4*z5 - 3*z8*z10",
    "z7^2 + 2/a*z8*z9 - z1*z4 - zeta^2/a*z2*z6 - zeta/a*z3*z5",
    "zeta/a*z8^2 + 2*zeta*z7*z9 - z1*z6 - zeta^2/a*z2*z5 - zeta*z3*z4",
    "zeta^2*z9^2 + 2*zeta^2*z7*z8 - z1*z5 - zeta^2*z2*z4 - zeta*z3*z6",
    "(zeta^2-zeta)*z4*z8 + (zeta-1)*z5*z7 + (1-zeta^2)*z6*z9",
    "(zeta-zeta^2)*z4*z9 + (1-zeta)/a*z5*z8 + (zeta^2-1)*z6*z7",
    "z1*z7 + zeta/a*z2*z9 + zeta^2/a*z3*z8 - 1/b*z4^2 - 2/(a*b)*z5*z6",
    "zeta^2*z1*z8 + z2*z7 + zeta*z3*z9 - 1/b*z6^2 - 2/b*z4*z5",
    "zeta*z1*z9 + zeta^2/a*z2*z8 + z3*z7 - 1/(a*b)*z5^2 - 2/b*z4*z6",
    "1/b*z4^2 - 1/(a*b)*z5*z6 - 3*z7*z10",
    "zeta^2/(a*b)*z5^2 - zeta^2/b*z4*z6 - 3*zeta*z9*z10",
    "zeta/b*z6^2 - zeta/b*z4*z5 - 3*zeta^2*z8*z10",
    "1/b*z4^2 - 1/(a*b)*z5*z6 - z1*z7 - zeta^2/a*z2*z9 - zeta/a*z3*z8",
    "1/(a*b)*z5^2 - 1/b*z4*z6 - zeta*z1*z9 - 1/a*z2*z8 - zeta^2*z3*z7",
    "1/b*z6^2 - 1/b*z4*z5 - zeta^2*z1*z8 - zeta*z2*z7 - z3*z9",
    "z1*z4 + zeta/a*z2*z6 + zeta^2/a*z3*z5 - 3*z4*z10",
    "zeta^2*z1*z5 + z2*z4 + zeta*z3*z6 - 3*z5*z10",
    "zeta*z1*z6 + zeta^2/a*z2*z5 + z3*z4 - 3*z6*z10",
    "z7^2 - 1/a*z8*z9 - 3*z4*z10",
    "1/a*z8^2 - z7*z9 - 3*zeta*z6*z10",
    "z9^2 - z7*z8 - 3*zeta^2*z5*z10",
    "1/b*z4^2 + 2/(a*b)*z5*z6 - z1*z7 - zeta/a*z2*z9 - zeta^2/a*z3*z8",
    "zeta^2/(a*b)*z5^2 + 2*zeta^2/b*z4*z6 - z1*z9 - zeta/a*z2*z8 - zeta^2*z3*z7",
    "zeta/b*z6^2 + 2*zeta/b*z4*z5 - z1*z8 - zeta*z2*z7 - zeta^2*z3*z9",
    "z1*z4 + zeta^2/a*z2*z6 + zeta/a*z3*z5 - z7^2 - 2/a*z8*z9",
    "zeta*z1*z5 + z2*z4 + zeta^2*z3*z6 - z9^2 - 2*z7*z8",
    "zeta^2*z1*z6 + zeta/a*z2*z5 + z3*z4 - 1/a*z8^2 - 2*z7*z9",
    "z1*z4 + zeta/a*z2*z6 + zeta^2/a*z3*z5 - z7^2 + 1/a*z8*z9",
    "zeta*z1*z5 + zeta^2*z2*z4 + z3*z6 - z9^2 + z7*z8",
    "zeta^2*z1*z6 + 1/a*z2*z5 + zeta*z3*z4 - 1/a*z8^2 + z7*z9",
    "z1*z4 + zeta/a*z2*z6 + zeta^2/a*z3*z5 - 3*z4*z10",
    "z1*z5 + zeta*z2*z4 + zeta^2*z3*z6 - 3*zeta*z5*z10",
    "z1*z6 + zeta/a*z2*z5 + zeta^2*z3*z4 - 3*zeta^2*z6*z10",
    "z7^2 + 2/a*z8*z9 - z1*z4 - zeta^2/a*z2*z6 - zeta/a*z3*z5",
    "zeta^2/a*z8^2 + 2*zeta^2*z7*z9 - zeta*z1*z6 - 1/a*z2*z5 - zeta^2*z3*z4",
    "zeta*z9^2 + 2*zeta*z7*z8 - zeta^2*z1*z5 - zeta*z2*z4 - z3*z6",
    "z1*z7 + zeta^2/a*z2*z9 + zeta/a*z3*z8 - 1/b*z4^2 + 1/(a*b)*z5*z6",
    "zeta*z1*z8 + z2*z7 + zeta^2*z3*z9 - zeta^2/b*z6^2 + zeta^2/b*z4*z5",
    "zeta^2*z1*z9 + zeta/a*z2*z8 + z3*z7 - zeta/(a*b)*z5^2 + zeta/b*z4*z6",
    "z1*z7 + zeta/a*z2*z9 + zeta^2/a*z3*z8 - 1/b*z4^2 - 2/(a*b)*z5*z6",
    "zeta*z1*z8 + zeta^2*z2*z7 + z3*z9 - zeta^2/b*z6^2 - 2*zeta^2/b*z4*z5",
    "zeta^2*z1*z9 + 1/a*z2*z8 + zeta*z3*z7 - zeta/(a*b)*z5^2 - 2*zeta/b*z4*z6",
    "z1*z7 + zeta^2/a*z2*z9 + zeta/a*z3*z8 - 3*z7*z10",
    "zeta^2*z1*z8 + zeta*z2*z7 + z3*z9 - 3*zeta*z8*z10",
    "zeta*z1*z9 + 1/a*z2*z8 + zeta^2*z3*z7 - 3*zeta^2*z9*z10",
    "z1^2 - 1/a*z2*z3 - 1/b*z4*z7 - zeta/(a*b)*z5*z9 - zeta^2/(a*b)*z6*z8",
    "zeta^2/a*z2^2 - zeta^2*z1*z3 - zeta/b*z4*z9 - zeta^2/(a*b)*z5*z8 - 1/b*z6*z7",
    "zeta*z3^2 - zeta*z1*z2 - zeta^2/b*z4*z8 - 1/b*z5*z7 - zeta/b*z6*z9",
    "z1^2 - 1/a*z2*z3 - 1/b*z4*z7 - zeta/(a*b)*z5*z9 - zeta^2/(a*b)*z6*z8",
    "zeta/a*z2^2 - zeta*z1*z3 - 1/b*z4*z9 - zeta/(a*b)*z5*z8 - zeta^2/b*z6*z7",
    "zeta^2*z3^2 - zeta^2*z1*z2 - 1/b*z4*z8 - zeta/b*z5*z7 - zeta^2/b*z6*z9",
    "1/b*z4*z7 + 1/(a*b)*z5*z9 + 1/(a*b)*z6*z8 - 3*z1*z10",
    "1/b*z4*z8 + 1/b*z5*z7 + 1/b*z6*z9 - 3*z2*z10",
    "1/b*z4*z9 + 1/(a*b)*z5*z8 + 1/b*z6*z7 - 3*z3*z10",
    "z1^2 - 1/a*z2*z3 - 1/b*z4*z7 - zeta/(a*b)*z5*z9 - zeta^2/(a*b)*z6*z8",
    "1/a*z2^2 - z1*z3 - zeta^2/b*z4*z9 - 1/(a*b)*z5*z8 - zeta/b*z6*z7",
    "z3^2 - z1*z2 - zeta/b*z4*z8 - zeta^2/b*z5*z7 - 1/b*z6*z9",
    "1/b*z4*z7 + 1/(a*b)*z5*z9 + 1/(a*b)*z6*z8 - 3*z1*z10",
    "zeta^2/b*z4*z8 + zeta^2/b*z5*z7 + zeta^2/b*z6*z9 - 3*zeta^2*z2*z10",
    "zeta/b*z4*z9 + zeta/(a*b)*z5*z8 + zeta/b*z6*z7 - 3*zeta*z3*z10",
    "1/b*z4*z7 + 1/(a*b)*z5*z9 + 1/(a*b)*z6*z8 - 3*z1*z10",
    "zeta/b*z4*z8 + zeta/b*z5*z7 + zeta/b*z6*z9 - 3*zeta*z2*z10",
    "zeta^2/b*z4*z9 + zeta^2/(a*b)*z5*z8 + zeta^2/b*z6*z7 - 3*zeta^2*z3*z10",
    "1/b*z4*z7 + zeta^2/(a*b)*z5*z9 + zeta/(a*b)*z6*z8 - 9*z10^2",
    "zeta/b*z4*z8 + 1/b*z5*z7 + zeta^2/b*z6*z9",
    "zeta^2/b*z4*z9 + zeta/(a*b)*z5*z8 + 1/b*z6*z7",
)

# the worked single-generator example: w8*w9 - w1*w10 and what it produces
EXAMPLE_TORIC = "w8*w9 - w1*w10"
EXAMPLE_H = "1/9*(v7 + zeta^2*v8 + zeta*v9)*(v7 + v8 + v9) - 1/3*v10*(v4 + v5 + v6)"
EXAMPLE_PROJECTIONS = {
    (0, 1): "v7^2 - v8*v9 - 3*v4*v10",
    (1, 1): "zeta*v9^2 - zeta*v7*v8 - 3*v5*v10",
    (2, 1): "zeta^2*v8^2 - zeta^2*v7*v9 - 3*v6*v10",
}
EXAMPLE_KERNEL = {
    (0, 1): "z7^2 - 1/a*z8*z9 - 3*z4*z10",
    (1, 1): "zeta*z9^2 - zeta*z7*z8 - 3*z5*z10",
    (2, 1): "zeta^2/a*z8^2 - zeta^2*z7*z9 - 3*z6*z10",
}

# the ten z-images and phi-images for n = 3
THETA_IMAGES_N3 = {
    "z1": "x1^3 + x2^3 + x3^3",
    "z2": "alpha^2*(zeta^2*x1^3 + zeta*x2^3 + x3^3)",
    "z3": "alpha*(zeta*x1^3 + zeta^2*x2^3 + x3^3)",
    "z4": "beta^2*(x1^2*x3 + x2^2*x1 + x3^2*x2)",
    "z5": "alpha^2*beta^2*(zeta^2*x1^2*x3 + zeta*x2^2*x1 + x3^2*x2)",
    "z6": "alpha*beta^2*(zeta*x1^2*x3 + zeta^2*x2^2*x1 + x3^2*x2)",
    "z7": "beta*(x1^2*x2 + x2^2*x3 + x3^2*x1)",
    "z8": "alpha^2*beta*(zeta^2*x1^2*x2 + zeta*x2^2*x3 + x3^2*x1)",
    "z9": "alpha*beta*(zeta*x1^2*x2 + zeta^2*x2^2*x3 + x3^2*x1)",
    "z10": "x1*x2*x3",
    "a": "alpha^3",
    "b": "beta^3",
}

PHI_IMAGES_N3 = {
    "z1": "w2 + w3 + w4",
    "z2": "alpha^2*(zeta^2*w2 + zeta*w3 + w4)",
    "z3": "alpha*(zeta*w2 + zeta^2*w3 + w4)",
    "z4": "beta^2*(w6 + w7 + w10)",
    "z5": "alpha^2*beta^2*(zeta^2*w6 + zeta*w7 + w10)",
    "z6": "alpha*beta^2*(zeta*w6 + zeta^2*w7 + w10)",
    "z7": "beta*(w5 + w8 + w9)",
    "z8": "alpha^2*beta*(zeta^2*w5 + zeta*w8 + w9)",
    "z9": "alpha*beta*(zeta*w5 + zeta^2*w8 + w9)",
    "z10": "w1",
    "a": "alpha^3",
    "b": "beta^3",
}

# eigenvector table rows: (vector, E12 exponent, E23 exponent)
EIGENVECTORS_N3 = (
    ("x1^2*x3 + x2^2*x1 + x3^2*x2", 0, 1),
    ("x1^2*x2 + x2^2*x3 + x3^2*x1", 0, 2),
    ("x1^3 + x2^3 + x3^3", 0, 0),
    ("x1*x2*x3", 0, 0),
    ("zeta^2*x1^2*x3 + zeta*x2^2*x1 + x3^2*x2", 1, 1),
    ("zeta^2*x1^2*x2 + zeta*x2^2*x3 + x3^2*x1", 1, 2),
    ("zeta^2*x1^3 + zeta*x2^3 + x3^3", 1, 0),
    ("zeta*x1^2*x3 + zeta^2*x2^2*x1 + x3^2*x2", 2, 1),
    ("zeta*x1^2*x2 + zeta^2*x2^2*x3 + x3^2*x1", 2, 2),
    ("zeta*x1^3 + zeta^2*x2^3 + x3^3", 2, 0),
)
UNIT_WEIGHTS_N3 = {"alpha": (1, 0), "alpha^-1": (2, 0), "beta": (0, 1), "beta^-1": (0, 2)}
