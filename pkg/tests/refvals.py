"""Frozen reference values shared by the unit and acceptance tests."""


def sho_cosine_rational_m1(nu: float) -> float:
    return (57 * nu**4 - 1408 * nu**2 + 3072) / (9 * nu**4 + 128 * nu**2 + 3072)


def sho_cosine_rational_m2(nu: float) -> float:
    return (
        -2
        * (33 * nu**6 - 4059 * nu**4 + 84480 * nu**2 - 184320)
        / (3 * (3 * nu**6 + 146 * nu**4 + 5120 * nu**2 + 122880))
    )


def sho_cosine_rational_m3(nu: float) -> float:
    return (
        25 * nu**8 - 9016 * nu**6 + 676560 * nu**4 - 12072960 * nu**2 + 25804800
    ) / (3 * nu**8 + 304 * nu**6 + 16080 * nu**4 + 829440 * nu**2 + 25804800)


SHO_COSINE_RATIONALS = {
    1: sho_cosine_rational_m1,
    2: sho_cosine_rational_m2,
    3: sho_cosine_rational_m3,
}

# first positive zero of C_m^2 - 1 as a fraction of pi
STABILITY_THRESHOLDS = {1: 0.94035, 2: 0.99817, 3: 0.99997}

# integral of the reciprocal gamma function over [-3, 0]:
# value of the grade-7 blend quadrature, and an independent reference
RECIP_GAMMA_BLEND_INTEGRAL = -0.606607588783124
RECIP_GAMMA_REFERENCE_INTEGRAL = -0.606607588776539
