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

analyzer module, symmetry of the adjoint, deficiency indices and the selfadjoint extension
verdict with their exact cross-checks.
"""

from toeplitz_lib.Algebra.GaussianRational import I
from toeplitz_lib.Algebra.Poly import sharp
from toeplitz_lib.Configurations import resolve
from toeplitz_lib.LogManager import get_component_logger
from toeplitz_lib.RootLocation.rootloc import count_roots
from toeplitz_lib.Symbol.RationalSymbol import helson_symbol, quadratic_family
from toeplitz_lib.Symbol.symmetry import real_on_circle, circle_image_classify, ImageClass
from toeplitz_lib.tools.asserts import assertTrue, assertZero

PAIRING_CONVENTION = "n_plus = m - closed_disk_roots(s - iq), " \
                     "n_minus = m - closed_disk_roots(s + iq)"


class CheckStatus(object):  # pylint: disable=too-few-public-methods
    """
    Enum for check verdicts.
    """
    PASS = "pass"
    SKIP = "skip"


class SelfAdjointReport(object):  # pylint: disable=too-many-instance-attributes
    """
    Symmetry, deficiency and extension data of the adjoint of T_omega. The numeric fields are
    None when the adjoint is not symmetric.
    """
    def __init__(self, omega):
        self.omega = omega
        self.symmetric = False
        self.gamma = None
        self.l_plus = None
        self.l_minus = None
        self.k_plus_in = None
        self.k_plus_out = None
        self.k_minus_in = None
        self.k_minus_out = None
        self.closed_disk_roots_s_plus_iq = None
        self.closed_disk_roots_s_minus_iq = None
        self.n_plus = None
        self.n_minus = None
        self.extension_exists = None
        self.image_class = None
        self.omega_at_zero = omega.as_rational_function().value_at_zero()
        self.pairing_convention = PAIRING_CONVENTION
        self.checks = []

    def add_check(self, name, status, message=None):
        """
        Record a check. A failing check raises InternalInconsistency.

        :param name: check name
        :param status: bool, or None for a check that does not apply
        :param message: failure text
        """
        if status is None:
            self.checks.append((name, CheckStatus.SKIP))
            return
        assertTrue(status, "{} failed for {}: {}".format(name, self.omega, message or ""))
        self.checks.append((name, CheckStatus.PASS))


def _logger():
    return get_component_logger("selfadjoint", "SAD")


def _identity_checks(report, s_plus, s_minus):
    gamma = report.gamma
    first = s_plus == sharp(s_minus).shift(report.l_minus).scale(gamma)
    second = s_minus == sharp(s_plus).shift(report.l_plus).scale(gamma)
    report.add_check("sharp_identities", first and second,
                     "s + iq = gamma z^l- (s - iq)# or its mirror does not hold")
    report.add_check("deficiency_root_identities",
                     report.k_plus_in == report.l_minus + report.k_minus_out
                     and report.k_minus_in == report.l_plus + report.k_plus_out,
                     "k+ in = l- + k- out or k- in = l+ + k+ out does not hold")
    report.add_check("single_nonzero_l", not (report.l_plus and report.l_minus),
                     "both l+ = {} and l- = {} nonzero".format(report.l_plus, report.l_minus))


def _structural_checks(report, config):
    omega = report.omega
    m_deg, n_deg = omega.m, omega.n
    report.add_check("degree_sandwich", n_deg <= m_deg <= 2 * n_deg,
                     "n = {}, m = {}".format(n_deg, m_deg))
    report.add_check("parity", m_deg % 2 == 0 if report.extension_exists else None,
                     "extension with odd m = {}".format(m_deg))
    report.add_check("nonselfadjoint_root",
                     report.k_plus_in + report.k_minus_in > 0 if m_deg >= 1 else None,
                     "neither s + iq nor s - iq has a root in the disk")
    index_plus = m_deg - report.k_plus_in
    index_minus = m_deg - report.k_minus_in
    report.add_check("fredholm_index_criterion",
                     (index_plus == index_minus) == report.extension_exists,
                     "indices {} and {}".format(index_plus, index_minus))
    report.add_check("deficiency_indices", (report.n_plus == report.n_minus) ==
                     report.extension_exists,
                     "n+ = {}, n- = {}".format(report.n_plus, report.n_minus))
    report.image_class = circle_image_classify(omega, config)
    report.add_check("proper_subset_shortcut",
                     report.extension_exists
                     if report.image_class == ImageClass.REAL_PROPER_SUBSET else None,
                     "omega(T) is a proper subset of R without a selfadjoint extension")
    report.add_check("odd_degree_full_line",
                     report.image_class == ImageClass.REAL_FULL_LINE if m_deg % 2 else None,
                     "odd m = {} with omega(T) != R".format(m_deg))


def analyze(omega, config=None):
    """
    Decide symmetry of the adjoint and, when symmetric, the deficiency indices and whether a
    selfadjoint extension exists. The verdict comes from the exact root counts of s +- iq;
    every cross-check that fails raises InternalInconsistency.

    :param omega: RationalSymbol of class RatT
    :param config: LabConfiguration or None
    :return: SelfAdjointReport
    :raises: NotRatT, InternalInconsistency
    """
    config = resolve(config)
    omega.require_rat_t("analyze")
    report = SelfAdjointReport(omega)
    witness = real_on_circle(omega)
    if witness is None:
        return report
    report.symmetric = True
    report.gamma = witness.gamma
    i_q = omega.q.scale(I)
    s_plus = omega.s + i_q
    s_minus = omega.s - i_q
    m_deg = omega.m
    report.l_plus = m_deg - s_plus.degree
    report.l_minus = m_deg - s_minus.degree
    counts_plus = count_roots(s_plus)
    counts_minus = count_roots(s_minus)
    assertZero(counts_plus.on_circle, "s + iq has roots on the circle for {}".format(omega))
    assertZero(counts_minus.on_circle, "s - iq has roots on the circle for {}".format(omega))
    report.k_plus_in, report.k_plus_out = counts_plus.inside, counts_plus.outside
    report.k_minus_in, report.k_minus_out = counts_minus.inside, counts_minus.outside
    report.closed_disk_roots_s_plus_iq = counts_plus.closed_disk
    report.closed_disk_roots_s_minus_iq = counts_minus.closed_disk
    report.add_check("closed_disk_equals_open_disk",
                     counts_plus.closed_disk == counts_plus.inside
                     and counts_minus.closed_disk == counts_minus.inside)
    report.n_plus = max(0, m_deg - counts_minus.closed_disk)
    report.n_minus = max(0, m_deg - counts_plus.closed_disk)
    report.extension_exists = counts_plus.inside == counts_minus.inside
    _identity_checks(report, s_plus, s_minus)
    _structural_checks(report, config)
    _logger().debug("%s: n+ = %d, n- = %d, extension %s", omega, report.n_plus, report.n_minus,
                    report.extension_exists)
    return report


def helson_family(power, config=None):
    """
    Analyze omega_k = (-i)^k (z+1)^k / (z-1)^k; an extension exists iff k is even.

    :param power: k >= 1
    :return: SelfAdjointReport
    """
    return analyze(helson_symbol(power, config), config)


def quadratic_family_report(parameter, config=None):
    """
    Analyze omega = i(1 + a z + z^2)/(1 - z^2); an extension exists iff |a| > 2.

    :param parameter: real rational a
    :return: SelfAdjointReport
    """
    return analyze(quadratic_family(parameter, config), config)


__all__ = ["CheckStatus", "SelfAdjointReport", "analyze", "helson_family",
           "quadratic_family_report", "PAIRING_CONVENTION"]
