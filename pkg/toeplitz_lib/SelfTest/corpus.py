"""
Copyright 2019 ARM Limited
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

corpus module, the built-in verification corpus. Each suite draws its cases from a seeded
Randomize up front and returns them as (case label, callable) pairs; a callable returns a list
of (check name, status) with status True, False or None for a check that does not apply.
"""

from fractions import Fraction
from itertools import product

from toeplitz_lib.Algebra.GaussianRational import GaussianRational, I
from toeplitz_lib.Algebra.Poly import Poly, sharp, divrem
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Operator.ApplyEngine import apply_adjoint, apply_forward, adjoint_identity_check
from toeplitz_lib.Operator.ApplyEngine import compression_solve, decompose_domain_element
from toeplitz_lib.Operator.ApplyEngine import multiple_space_contains, sarason_axioms_check
from toeplitz_lib.Operator.ApplyEngine import szego_eigen
from toeplitz_lib.Operator.descriptors import SpaceDescriptor
from toeplitz_lib.Operator.profile import adjoint_domain, adjoint_profile
from toeplitz_lib.RootLocation.rootloc import RootCounts, count_roots
from toeplitz_lib.RootLocation.schur_cohn import cohn_test
from toeplitz_lib.SelfAdjoint.analyzer import CheckStatus, analyze, helson_family
from toeplitz_lib.SelfAdjoint.analyzer import quadratic_family_report
from toeplitz_lib.Smirnov.canonical import canonical_form, sarason_correspondence_checks
from toeplitz_lib.Symbol.RationalSymbol import make_symbol, omega_star, quadratic_family
from toeplitz_lib.Symbol.symmetry import cayley_compose, omega_star_equals_omega, real_on_circle

HELSON_POWERS = list(range(1, 7))
QUADRATIC_PARAMETERS = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(3), Fraction(4)]
DEGENERATE_QUADRATIC_PARAMETER = Fraction(2)
KERNEL_GRID = list(range(4))

CORPUS_SIZES = {
    "adjoint_identity": 200,
    "compression_oracle": 100,
    "root_location": 500,
    "symmetry": 100,
    "symmetry_controls": 100,
    "fejer_riesz": 50,
    "szego": 50,
    "sarason": 100,
    "multiple_space": 100
}

# Kernel grid roots: zeros of s inside, poles of q inside and on the circle.
ZEROS_INSIDE = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
POLES_INSIDE = [Fraction(-1, 2), GaussianRational(0, Fraction(1, 3)), Fraction(-1, 4)]
POLES_ON_CIRCLE = [1, -1, I]

MAX_DEGREE = 6
MAX_COMPRESSION_DEGREE = 8


def scaled(name, scale):
    """
    :param name: key of CORPUS_SIZES
    :param scale: float factor
    :return: number of randomized cases, at least 1
    """
    return max(1, int(round(CORPUS_SIZES[name] * scale)))


def _report_checks(report):
    return [(name, None if status == CheckStatus.SKIP else True)
            for name, status in report.checks]


def helson_suite(rand, scale, config):  # pylint: disable=unused-argument
    """
    omega_k for k = 1..6: symmetric, extension iff k even; Dom(T*) = (1 - z)H^2 for k = 1.
    """
    def case(power):
        report = helson_family(power, config)
        checks = [("symmetric", report.symmetric),
                  ("extension_iff_even", report.extension_exists == (power % 2 == 0))]
        if power == 1:
            expected = SpaceDescriptor(inner_factor=Poly([1, -1]))
            checks.append(("adjoint_domain", adjoint_domain(report.omega).same_space(expected)))
        return checks + _report_checks(report)
    return [("k={}".format(power), lambda power=power: case(power)) for power in HELSON_POWERS]


def quadratic_suite(rand, scale, config):  # pylint: disable=unused-argument
    """
    i(1 + a z + z^2)/(1 - z^2): extension iff |a| > 2; a = 2 is reduced at construction.
    """
    def case(parameter):
        report = quadratic_family_report(parameter, config)
        return [("extension_iff_large_parameter",
                 report.extension_exists == (abs(parameter) > 2))] + _report_checks(report)

    def degenerate():
        omega = quadratic_family(DEGENERATE_QUADRATIC_PARAMETER, config)
        return [("coprimality_reduction", omega.reduction.reduced)]
    cases = [("a={}".format(parameter), lambda parameter=parameter: case(parameter))
             for parameter in QUADRATIC_PARAMETERS]
    cases.append(("a={}".format(DEGENERATE_QUADRATIC_PARAMETER), degenerate))
    return cases


def adjoint_identity_suite(rand, scale, config):
    """
    <T f, q# v> = <f, T* (q# v)> exactly on random (omega, f, v).
    """
    def case(s_poly, q_poly, function, v_function):
        omega = make_symbol(s_poly, q_poly, config)
        element = decompose_domain_element(omega, function)
        return [("pairing_residual_zero",
                 not adjoint_identity_check(omega, element, v_function))]
    cases = []
    for index in range(scaled("adjoint_identity", scale)):
        s_poly, q_poly = rand.random_ratt_pair(MAX_DEGREE, MAX_DEGREE)
        data = (s_poly, q_poly, rand.random_hardy_function(MAX_DEGREE),
                rand.random_hardy_function(MAX_DEGREE))
        cases.append(("#{}".format(index), lambda data=data: case(*data)))
    return cases


def compression_oracle_suite(rand, scale, config):
    """
    compression_solve equals the quotient of s r1 by q.
    """
    def case(s_poly, q_poly, r1_draw):
        omega = make_symbol(s_poly, q_poly, config)
        r1_poly = r1_draw if r1_draw.degree < omega.m else divrem(r1_draw, Poly.monomial(
            omega.m))[1]
        expected = divrem(omega.s * r1_poly, omega.q)[0]
        return [("matches_division", compression_solve(omega, r1_poly) == expected)]
    cases = []
    for index in range(scaled("compression_oracle", scale)):
        s_poly, q_poly = rand.random_ratt_pair(MAX_COMPRESSION_DEGREE, MAX_COMPRESSION_DEGREE,
                                               proper=True)
        r1_draw = rand.random_poly(rand.random_integer(q_poly.degree - 1)) \
            if q_poly.degree >= 1 else Poly()
        cases.append(("#{}".format(index),
                      lambda data=(s_poly, q_poly, r1_draw): case(*data)))
    return cases


def adjoint_kernel_suite(rand, scale, config):  # pylint: disable=unused-argument
    """
    Grid over (n_-, m_-, m_0): kernel dimension formula, and for Rat(T) symbols exact
    annihilation of every kernel basis element by the adjoint.
    """
    def case(n_minus, m_minus, m_zero):
        s_poly = Poly.from_roots(ZEROS_INSIDE[:n_minus] + [2])
        q_poly = Poly.from_roots(POLES_INSIDE[:m_minus] + POLES_ON_CIRCLE[:m_zero])
        omega = make_symbol(s_poly, q_poly, config)
        result = adjoint_profile(omega)
        expected = max(0, n_minus - m_minus - m_zero)
        checks = [("kernel_dim_formula", result.kernel_dim == expected),
                  ("kernel_basis_length", len(result.kernel_basis) == expected)]
        if omega.is_rat_t():
            q_sharp = RationalFunction(sharp(omega.q))
            checks.append(("kernel_annihilated",
                           all(apply_adjoint(omega, element / q_sharp).is_zero()
                               for element in result.kernel_basis)))
        else:
            checks.append(("kernel_annihilated", None))
        return checks
    return [("n-={},m-={},m0={}".format(*cell), lambda cell=cell: case(*cell))
            for cell in product(KERNEL_GRID, repeat=3) if cell[0] >= cell[1] + cell[2]]


def root_location_suite(rand, scale, config):  # pylint: disable=unused-argument
    """
    Exact root counts of polynomials built from prescribed root multisets.
    """
    def case(poly, expected):
        counts = count_roots(poly)
        return [("counts_match_construction", counts == expected),
                ("cohn_test_agrees", cohn_test(poly) == (expected.on_circle == poly.degree))]
    cases = []
    for index in range(scaled("root_location", scale)):
        roots, inside, on_circle, outside = [], 0, 0, 0
        for root, multiplicity, radius in rand.random_root_multiset():
            roots += [root] * multiplicity
            if radius < 1:
                inside += multiplicity
            elif radius == 1:
                on_circle += multiplicity
            else:
                outside += multiplicity
        lead = rand.random_gaussian()
        while not lead:
            lead = rand.random_gaussian()
        poly = Poly.from_roots(roots, lead)
        expected = RootCounts(inside, on_circle, outside)
        cases.append(("#{}".format(index), lambda data=(poly, expected): case(*data)))
    return cases


def symmetry_suite(rand, scale, config):
    """
    Cayley images of real symbols: both symmetry routes agree and the selfadjoint analysis
    passes its identity, degree, parity and shortcut checks.
    """
    def case(s_real, q_real):
        omega = cayley_compose(s_real, q_real, config=config)
        witness = real_on_circle(omega)
        report = analyze(omega, config)
        return [("condition_five", witness is not None),
                ("cross_multiplication", omega_star_equals_omega(omega)),
                ("symmetric", report.symmetric)] + _report_checks(report)
    cases = []
    for index in range(scaled("symmetry", scale)):
        s_real = rand.random_poly(rand.random_integer(3), real=True)
        q_real = rand.random_real_rooted(rand.random_integer(3))
        cases.append(("cayley#{}".format(index), lambda data=(s_real, q_real): case(*data)))
    return cases


def symmetry_controls_suite(rand, scale, config):
    """
    Random complex Rat(T) symbols: the condition on s, q and the omega* = omega test agree.
    """
    def case(s_poly, q_poly):
        omega = make_symbol(s_poly, q_poly, config)
        return [("routes_agree",
                 (real_on_circle(omega) is not None) == omega_star_equals_omega(omega))]
    cases = []
    for index in range(scaled("symmetry_controls", scale)):
        pair = rand.random_ratt_pair(4, 4)
        cases.append(("control#{}".format(index), lambda pair=pair: case(*pair)))
    return cases


def fejer_riesz_suite(rand, scale, config):
    """
    Canonical Smirnov form b/a: certificates within tolerance, Sarason descriptor identities.
    """
    def case(s_poly, q_poly):
        omega = make_symbol(s_poly, q_poly, config)
        triple = canonical_form(omega, config)
        checks = [("circle_identity", triple.circle_residual <= config.fejer_riesz),
                  ("a_at_zero_positive", triple.a_at_zero.real > 0
                   and abs(triple.a_at_zero.imag) <= config.phase),
                  ("r_outer", triple.min_root_modulus is None
                   or triple.min_root_modulus > 1)]
        return checks + sarason_correspondence_checks(omega, config)
    cases = []
    for index in range(scaled("fejer_riesz", scale)):
        pair = rand.random_ratt_pair(MAX_DEGREE, MAX_DEGREE)
        cases.append(("#{}".format(index), lambda pair=pair: case(*pair)))
    return cases


def szego_suite(rand, scale, config):
    """
    Szego eigenrelation certificates on random proper symbols and disk points, with the
    lambda = 0 value cross-checked against T applied to the constant 1.
    """
    def case(s_poly, q_poly, point):
        omega = make_symbol(s_poly, q_poly, config)
        eigenvalue, _ = szego_eigen(omega, point)
        checks = [("eigenvalue_is_conjugate_of_star",
                   eigenvalue == omega_star(omega)(point).conjugate())]
        at_zero, _ = szego_eigen(omega, 0)
        image = apply_forward(omega, decompose_domain_element(omega, RationalFunction(
            Poly.constant(1))))
        checks.append(("value_at_zero_matches_forward",
                       image == RationalFunction(Poly.constant(at_zero))))
        return checks
    cases = []
    for index in range(scaled("szego", scale)):
        s_poly, q_poly = rand.random_ratt_pair(MAX_DEGREE, MAX_DEGREE, proper=True)
        data = (s_poly, q_poly, rand.random_disk_point())
        cases.append(("#{}".format(index), lambda data=data: case(*data)))
    return cases


def sarason_suite(rand, scale, config):
    """
    Sarason-Toeplitz axioms on random domain elements.
    """
    def case(s_poly, q_poly, function):
        omega = make_symbol(s_poly, q_poly, config)
        report = sarason_axioms_check(omega, decompose_domain_element(omega, function))
        return report.checks
    cases = []
    for index in range(scaled("sarason", scale)):
        s_poly, q_poly = rand.random_ratt_pair(5, 5)
        data = (s_poly, q_poly, rand.random_hardy_function(5))
        cases.append(("#{}".format(index), lambda data=data: case(*data)))
    return cases


def multiple_space_suite(rand, scale, config):  # pylint: disable=unused-argument
    """
    For coprime r and r~: r g in r~ H^2 iff g in r~ H^2.
    """
    def case(multiplier, factor, function):
        return [("multiplier_invariance",
                 multiple_space_contains(function * multiplier, factor)
                 == multiple_space_contains(function, factor))]
    cases = []
    for index in range(scaled("multiple_space", scale)):
        factor = Poly.from_roots([rand.random_point(rand.random_list_elem([Fraction(1, 2), 1]))
                                  for _ in range(rand.random_integer(3, 1))])
        multiplier = Poly.from_roots([rand.random_point(Fraction(1, 3))
                                      for _ in range(rand.random_integer(2))])
        function = rand.random_hardy_function(4)
        if rand.random_integer(1):
            function = function * factor
        cases.append(("#{}".format(index),
                      lambda data=(multiplier, factor, function): case(*data)))
    return cases


SUITES = [
    ("helson", helson_suite),
    ("quadratic", quadratic_suite),
    ("adjoint_identity", adjoint_identity_suite),
    ("compression_oracle", compression_oracle_suite),
    ("adjoint_kernel", adjoint_kernel_suite),
    ("root_location", root_location_suite),
    ("symmetry", symmetry_suite),
    ("symmetry_controls", symmetry_controls_suite),
    ("fejer_riesz", fejer_riesz_suite),
    ("szego", szego_suite),
    ("sarason", sarason_suite),
    ("multiple_space", multiple_space_suite)
]

SUITE_NAMES = [name for name, _ in SUITES]
