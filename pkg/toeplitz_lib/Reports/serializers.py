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

serializers module, turns library values into JSON-ready structures. Exact numbers become
strings in the coefficient literal grammar; floating values become [re, im] pairs rounded to
15 significant digits.
"""

from fractions import Fraction
from numbers import Number

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.literals import format_complex
from toeplitz_lib.SelfAdjoint.analyzer import CheckStatus


def round_float(value):
    """
    :param value: real number
    :return: float rounded to 15 significant digits
    """
    return float(format(float(value), ".15g"))


def complex_pair(value):
    """
    :param value: complex number
    :return: [re, im] rounded
    """
    value = complex(value)
    return [round_float(value.real), round_float(value.imag)]


def number(value):
    """
    :param value: GaussianRational, rational, float or complex
    :return: literal string for exact values, [re, im] otherwise, None for None
    """
    if value is None:
        return None
    if isinstance(value, (GaussianRational, int, Fraction)):
        return format_complex(value)
    return complex_pair(value)


def poly(value):
    """
    :param value: Poly or NumericPoly
    :return: list of literal strings, or list of [re, im] pairs
    """
    if value is None:
        return None
    if isinstance(value, Poly):
        return [format_complex(coeff) for coeff in value.coeffs]
    return [complex_pair(coeff) for coeff in value.coeffs]


def rational_function(value):
    """
    :param value: RationalFunction or Poly
    :return: {"numer", "denom"}
    """
    if isinstance(value, Poly):
        value = RationalFunction(value)
    return {"numer": poly(value.numer), "denom": poly(value.denom)}


def shifted_symbol(value):
    """
    :param value: ShiftedSymbol or None
    :return: {"shift", "numer", "denom"} or None
    """
    if value is None:
        return None
    return {"shift": value.shift, "numer": poly(value.numer), "denom": poly(value.denom)}


def p_label(value):
    """
    Hardy exponents are labels; rational ones print as literals.
    """
    if isinstance(value, (int, Fraction)):
        return str(value)
    return round_float(value)


def space_descriptor(value):
    """
    :param value: SpaceDescriptor or None
    :return: dict or None
    """
    if value is None:
        return None
    return {"shift": value.shift,
            "multiplier": shifted_symbol(value.multiplier),
            "tail_projection_cut": value.tail_projection_cut,
            "inner_factor": poly(value.inner_factor),
            "finite_span": [rational_function(item) for item in value.finite_span],
            "p": p_label(value.p_label),
            "text": repr(value)}


def root_counts(value):
    """
    :param value: RootCounts
    :return: dict
    """
    return value.to_dict()


def circle_factorization(value):
    """
    :param value: CircleFactorization
    :return: dict
    """
    return {"unit": number(value.unit),
            "inside": poly(value.part_inside),
            "on_circle": poly(value.part_on),
            "outside": poly(value.part_outside),
            "counts": root_counts(value.counts),
            "exact": value.exact}


def symbol(omega):
    """
    :param omega: RationalSymbol
    :return: dict of the reduced pair, its class and the root counts
    """
    return {"s": poly(omega.s),
            "q": poly(omega.q),
            "class": omega.symbol_class,
            "m": omega.m,
            "n": omega.n,
            "m_minus": omega.m_minus, "m_zero": omega.m_zero, "m_plus": omega.m_plus,
            "n_minus": omega.n_minus, "n_zero": omega.n_zero, "n_plus": omega.n_plus,
            "reduced": omega.reduction.reduced,
            "common_factor": poly(omega.reduction.common_factor),
            "s_split": circle_factorization(omega.s_split),
            "q_split": circle_factorization(omega.q_split)}


def profile(value):
    """
    :param value: OperatorProfile or AdjointProfile
    :return: dict
    """
    if value is None:
        return None
    basis = value.kernel_basis
    result = {"side": value.side,
              "p": p_label(value.p_label),
              "kernel_dim": value.kernel_dim,
              "kernel_basis": None if basis is None else [rational_function(item)
                                                          for item in basis],
              "domain": space_descriptor(value.domain),
              "range": space_descriptor(value.range),
              "range_complement_dim": value.range_complement_dim,
              "closed_range": value.closed_range,
              "dense_range": value.dense_range,
              "injective": value.injective,
              "fredholm": value.fredholm,
              "index": value.index}
    tilde_star = getattr(value, "tilde_p_star", None)
    if tilde_star is not None:
        result["tilde_p_star"] = [poly(item) for item in tilde_star]
    return result


def selfadjoint(report):
    """
    :param report: SelfAdjointReport or None
    :return: dict
    """
    if report is None:
        return None
    return {"symmetric": report.symmetric,
            "gamma": number(report.gamma),
            "l_plus": report.l_plus, "l_minus": report.l_minus,
            "k_plus_in": report.k_plus_in, "k_plus_out": report.k_plus_out,
            "k_minus_in": report.k_minus_in, "k_minus_out": report.k_minus_out,
            "closed_disk_roots_s_plus_iq": report.closed_disk_roots_s_plus_iq,
            "closed_disk_roots_s_minus_iq": report.closed_disk_roots_s_minus_iq,
            "n_plus": report.n_plus, "n_minus": report.n_minus,
            "extension_exists": report.extension_exists,
            "image_class": report.image_class,
            "omega_at_zero": number(report.omega_at_zero),
            "pairing_convention": report.pairing_convention}


def canonical(triple):
    """
    :param triple: CanonicalTriple
    :return: dict with a = q/r, b = s/r and the certificates
    """
    return {"r": poly(triple.r),
            "a": {"numer": poly(triple.a_numer), "denom": poly(triple.a_denom)},
            "b": {"numer": poly(triple.b_numer), "denom": poly(triple.b_denom)},
            "a_at_zero": complex_pair(triple.a_at_zero),
            "circle_residual": round_float(triple.circle_residual),
            "modulus_residual": round_float(triple.modulus_residual),
            "min_root_modulus": None if triple.min_root_modulus is None
                                else round_float(triple.min_root_modulus),
            "sarason_domain": space_descriptor(triple.sarason_domain)}


def check_status(status):
    """
    :param status: bool, None or a CheckStatus value
    :return: "pass", "fail" or "skip"
    """
    if status is None or status == CheckStatus.SKIP:
        return "skip"
    if status is True or status == CheckStatus.PASS:
        return "pass"
    return "fail"


def checks(pairs):
    """
    :param pairs: iterable of (name, status)
    :return: list of {"name", "status"}
    """
    return [{"name": name, "status": check_status(status)} for name, status in pairs]


def plain(value):
    """
    Generic fallback for result sections: exact numbers and polynomials by their
    serializers, containers recursively.
    """
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, RationalFunction):
        return rational_function(value)
    if isinstance(value, Poly) or hasattr(value, "coeffs"):
        return poly(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (GaussianRational, Fraction)):
        return number(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Number):
        return complex_pair(value) if isinstance(value, complex) else round_float(value)
    return str(value)
