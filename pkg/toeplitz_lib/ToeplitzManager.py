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

ToeplitzManager module. Contains the ToeplitzManager class, the handler of one command line
run: it parses arguments, sets up logging and configuration, dispatches the command, renders
the report and maps errors to exit codes.
"""

# pylint: disable=too-many-locals

import csv

import jsonschema
import numpy

import toeplitz_lib.LogManager as LogManager
import toeplitz_lib.Reports.serializers as serializers
from toeplitz_lib.Algebra.Poly import Poly, divrem, sharp
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Configurations import LabConfiguration
from toeplitz_lib.Operator.ApplyEngine import apply_adjoint, apply_forward, compression_solve
from toeplitz_lib.Operator.ApplyEngine import adjoint_identity_check, hardy_pairing
from toeplitz_lib.Operator.ApplyEngine import sarason_axioms_check, szego_eigen
from toeplitz_lib.Operator.descriptors import DomElement
from toeplitz_lib.Operator.profile import adjoint_profile, index_matches_dimensions, profile
from toeplitz_lib.Operator.profile import tilde_p_witness
from toeplitz_lib.Randomize.seed import seed_from_environment
from toeplitz_lib.Reports.ReportBase import make_document
from toeplitz_lib.Reports.ReportConsole import ReportConsole
from toeplitz_lib.Reports.ReportJson import ReportJson
from toeplitz_lib.ReturnCodes import ReturnCodes
from toeplitz_lib.SelfAdjoint.analyzer import analyze
from toeplitz_lib.SelfTest.runner import run_corpus
from toeplitz_lib.Smirnov.canonical import canonical_form, sarason_correspondence_checks
from toeplitz_lib.Symbol.RationalSymbol import helson_symbol, make_symbol, wiener_hopf_split
from toeplitz_lib.ToeplitzErrors import DomainError, InternalInconsistency, ParseError
from toeplitz_lib.arguments import get_base_arguments, get_parser, SYMBOL_COMMANDS
from toeplitz_lib.literals import parse_complex_literal, parse_poly_literal
from toeplitz_lib.tools.asserts import assertTrue
from toeplitz_lib.tools.tools import get_fw_version


def verified(pairs):
    """
    Keep named check results; a False status is an exact identity that failed.

    :param pairs: iterable of (name, status) with status True, False or None
    :return: list of (name, status)
    :raises: InternalInconsistency on a False status
    """
    pairs = list(pairs)
    for name, status in pairs:
        assertTrue(status is not False, "check {} failed".format(name))
    return pairs


def kernel_annihilation(omega, adjoint):
    """
    :return: check status that the adjoint kills every emitted kernel basis element
    """
    if not omega.is_rat_t() or adjoint.kernel_basis is None:
        return None
    q_sharp = RationalFunction(sharp(omega.q))
    return all(apply_adjoint(omega, element / q_sharp).is_zero()
               for element in adjoint.kernel_basis)


def write_curve(omega, filename, config):
    """
    Write theta,re,im samples of omega on the circle, skipping samples at poles.

    :return: number of rows written
    """
    count = config.circle_points
    thetas = 2 * numpy.pi * numpy.arange(count) / float(count)
    points = numpy.exp(1j * thetas)
    keep = numpy.abs(omega.q.evaluate(points)) > config.tau
    values = omega.evaluate(points[keep])
    with open(filename, "w") as curve_file:
        writer = csv.writer(curve_file)
        writer.writerow(["theta", "re", "im"])
        for theta, value in zip(thetas[keep], values):
            writer.writerow([repr(float(theta)), repr(float(value.real)),
                             repr(float(value.imag))])
    return int(numpy.count_nonzero(keep))


class ToeplitzManager(object):
    """
    Command line run handler.
    """
    def __init__(self, argv=None):
        self.args, self.unknown = ToeplitzManager._parse_arguments(argv)
        LogManager.init_base_logging(self.args.log or "./log", verbose=self.args.verbose,
                                     silent=self.args.silent, color=self.args.color,
                                     no_file=self.args.log is None,
                                     config_location=self.args.logging_cfg)
        self.logger = LogManager.get_component_logger("manager", "MGR")
        self.config = None
        self.commands = {
            "analyze": self.analyze,
            "adjoint": self.adjoint,
            "selfadjoint": self.selfadjoint,
            "apply": self.apply,
            "pair": self.pair,
            "szego": self.szego,
            "canonical": self.canonical,
            "compress": self.compress,
            "helson": self.helson,
            "selftest": self.selftest
        }

    @staticmethod
    def _parse_arguments(argv=None):
        """
        Static method for parsing arguments
        """
        parser = get_base_arguments(get_parser())
        args, unknown = parser.parse_known_args(argv)
        return args, unknown

    def check_args(self):
        """
        Validates that a command was given and that all arguments were recognised.

        :return: True or False.
        """
        parser = get_base_arguments(get_parser())
        if self.unknown:
            self.logger.error("Following parameters were unknown: %s", self.unknown)
            parser.print_help()
            return False
        if not self.args.command and not self.args.version:
            self.logger.error("No command given")
            parser.print_help()
            return False
        return True

    def run(self):
        """
        Run the command and print its report.

        :return: exit code from ReturnCodes
        """
        if not self.check_args():
            return ReturnCodes.RETCODE_PARSE_ERROR
        if self.args.version:
            print(get_fw_version())  # pylint: disable=superfluous-parens
            return ReturnCodes.RETCODE_SUCCESS
        try:
            self.config = self._load_config()
            document, results = self.commands[self.args.command]()
            report = ReportJson(document, results) if self.args.json \
                else ReportConsole(document, results)
            output = report.generate()
        except ParseError as error:
            self.logger.error("%s", error)
            return ReturnCodes.RETCODE_PARSE_ERROR
        except DomainError as error:
            self.logger.error("%s: %s", type(error).__name__, error)
            return ReturnCodes.RETCODE_DOMAIN_ERROR
        except (InternalInconsistency, jsonschema.ValidationError) as error:
            self.logger.error("Internal inconsistency: %s", error)
            return ReturnCodes.RETCODE_INTERNAL_INCONSISTENCY
        except (IOError, OSError) as error:
            self.logger.error("I/O error: %s", error)
            return ReturnCodes.RETCODE_DOMAIN_ERROR
        print(output)  # pylint: disable=superfluous-parens
        for logfile in LogManager.get_logfiles():
            self.logger.info("Run log written to %s", logfile)
        if results is not None and results.failure:
            return ReturnCodes.RETCODE_SELFTEST_FAIL
        return ReturnCodes.RETCODE_SUCCESS

    def _load_config(self):
        """
        :return: LabConfiguration from --config with --tol applied
        :raises: ParseError for an unreadable or invalid configuration file
        """
        config = LabConfiguration()
        if self.args.config:
            try:
                config = LabConfiguration.from_file(self.args.config)
            except (IOError, ValueError, jsonschema.ValidationError) as error:
                raise ParseError(0, "a readable configuration file matching config_schema.json "
                                    "({})".format(error), self.args.config)
        if self.args.tol is not None:
            if not self.args.tol > 0:
                raise ParseError(0, "a positive tolerance", str(self.args.tol))
            config = config.with_overrides({"tolerances": {"tau": self.args.tol}})
        return config

    def _poly(self, option, default=None):
        text = getattr(self.args, option)
        if text is None:
            if default is None:
                raise ParseError(0, "option --{} for command {}".format(
                    option.replace("_", "-"), self.args.command))
            text = default
        return parse_poly_literal(text)

    def _symbol(self):
        if self.args.command in SYMBOL_COMMANDS and (self.args.s is None or self.args.q is None):
            raise ParseError(0, "--s and --q for command {}".format(self.args.command))
        return make_symbol(parse_poly_literal(self.args.s), parse_poly_literal(self.args.q),
                           self.config)

    def _p_label(self):
        value = parse_complex_literal(self.args.p)
        if not value.is_real():
            raise ParseError(0, "a real exponent", self.args.p)
        return value.re

    @property
    def _strict(self):
        return self.args.mode == "exact"

    def analyze(self):
        """
        Full structural profile of T_omega and its adjoint, with the selfadjoint analysis for
        Rat(T) symbols.
        """
        omega = self._symbol()
        p_label = self._p_label()
        forward = profile(omega, p_label, strict=self._strict)
        adjoint = adjoint_profile(omega, p_label, with_tilde_star=omega.is_rat_t(),
                                  strict=self._strict)
        report = analyze(omega, self.config) if omega.is_rat_t() else None
        split = wiener_hopf_split(omega, self.config)
        checks = [("fredholm_index", index_matches_dimensions(omega, forward)),
                  ("closed_range_agrees", forward.closed_range == adjoint.closed_range),
                  ("adjoint_dense_iff_injective", adjoint.dense_range == forward.injective),
                  ("dense_iff_adjoint_injective", forward.dense_range == adjoint.injective),
                  ("adjoint_kernel_annihilated", kernel_annihilation(omega, adjoint))]
        if omega.is_rat_t():
            checks.append(("tilde_p_witnesses",
                           all(tilde_p_witness(omega, item) is not None
                               for item in forward.range.finite_span)))
        result = {"kappa": split.kappa,
                  "wiener_hopf_exact": split.exact,
                  "mode": self.args.mode}
        if self.args.emit_curve:
            result["curve_rows"] = write_curve(omega, self.args.emit_curve, self.config)
            result["curve_file"] = self.args.emit_curve
        if report is not None:
            checks += report.checks
        document = make_document("analyze",
                                 symbol=serializers.symbol(omega),
                                 profile=serializers.profile(forward),
                                 adjoint=serializers.profile(adjoint),
                                 selfadjoint=serializers.selfadjoint(report),
                                 result=result,
                                 checks=serializers.checks(verified(checks)))
        return document, None

    def adjoint(self):
        """
        Profile of the adjoint with the range supplement of T_(omega*).
        """
        omega = self._symbol()
        adjoint = adjoint_profile(omega, self._p_label(), with_tilde_star=omega.is_rat_t(),
                                  strict=self._strict)
        checks = [("adjoint_kernel_annihilated", kernel_annihilation(omega, adjoint))]
        return make_document("adjoint",
                             symbol=serializers.symbol(omega),
                             adjoint=serializers.profile(adjoint),
                             checks=serializers.checks(verified(checks))), None

    def selfadjoint(self):
        """
        Symmetry, deficiency indices and the selfadjoint extension verdict.
        """
        omega = self._symbol()
        report = analyze(omega, self.config)
        return make_document("selfadjoint",
                             symbol=serializers.symbol(omega),
                             selfadjoint=serializers.selfadjoint(report),
                             checks=serializers.checks(report.checks)), None

    def helson(self):
        """
        omega_k = (-i)^k (z+1)^k/(z-1)^k with its adjoint profile and selfadjoint analysis.
        """
        if self.args.k is None:
            raise ParseError(0, "option --k for command helson")
        omega = helson_symbol(self.args.k, self.config)
        report = analyze(omega, self.config)
        adjoint = adjoint_profile(omega, self._p_label(), strict=self._strict)
        result = {"k": self.args.k, "extension_expected": self.args.k % 2 == 0}
        checks = report.checks + [("extension_matches_parity",
                                   report.extension_exists == result["extension_expected"])]
        return make_document("helson",
                             symbol=serializers.symbol(omega),
                             adjoint=serializers.profile(adjoint),
                             selfadjoint=serializers.selfadjoint(report),
                             result=result,
                             checks=serializers.checks(verified(checks))), None

    def apply(self):
        """
        T_omega on f = q h + r, the adjoint on g = q# v, their pairing identity and the
        Sarason axiom checks on f.
        """
        omega = self._symbol()
        element = DomElement(self._poly("h", "[]"), self._poly("r", "[]"))
        v_function = RationalFunction(self._poly("v", "[1]"))
        image = apply_forward(omega, element)
        adjoint_image = apply_adjoint(omega, v_function)
        residual = adjoint_identity_check(omega, element, v_function)
        report = sarason_axioms_check(omega, element)
        result = {"f": serializers.rational_function(element.value(omega.q)),
                  "forward": serializers.rational_function(image),
                  "v": serializers.rational_function(v_function),
                  "adjoint": serializers.rational_function(adjoint_image),
                  "pairing_residual": serializers.number(residual)}
        checks = [("adjoint_identity", not residual)] + report.checks
        return make_document("apply",
                             symbol=serializers.symbol(omega),
                             result=result,
                             checks=serializers.checks(verified(checks))), None

    def pair(self):
        """
        Exact Hardy space pairing of two rational functions.
        """
        first = RationalFunction(self._poly("f_num"), self._poly("f_den"))
        second = RationalFunction(self._poly("g_num"), self._poly("g_den"))
        value = hardy_pairing(first, second)
        return make_document("pair",
                             result={"f": serializers.rational_function(first),
                                     "g": serializers.rational_function(second),
                                     "pairing": serializers.number(value)}), None

    def szego(self):
        """
        Szego kernel eigenvalue with its polynomial certificate.
        """
        omega = self._symbol()
        if self.args.lambda_ is None:
            raise ParseError(0, "option --lambda for command szego")
        point = parse_complex_literal(self.args.lambda_)
        eigenvalue, r_poly = szego_eigen(omega, point)
        return make_document("szego",
                             symbol=serializers.symbol(omega),
                             result={"lambda": serializers.number(point),
                                     "eigenvalue": serializers.number(eigenvalue),
                                     "r": serializers.poly(r_poly)},
                             checks=serializers.checks([("szego_identity", True)])), None

    def canonical(self):
        """
        Canonical Smirnov form b/a through Fejer-Riesz factorization.
        """
        omega = self._symbol()
        triple = canonical_form(omega, self.config)
        checks = sarason_correspondence_checks(omega, self.config)
        return make_document("canonical",
                             symbol=serializers.symbol(omega),
                             result=serializers.canonical(triple),
                             checks=serializers.checks(checks)), None

    def compress(self):
        """
        Solve the compressed Toeplitz system for r and compare with polynomial division.
        """
        omega = self._symbol()
        r1_poly = self._poly("r1")
        solution = compression_solve(omega, r1_poly)
        quotient = divrem(omega.s * r1_poly, omega.q)[0]
        forward = apply_forward(omega, DomElement(Poly(), r1_poly))
        checks = [("matches_division", solution == quotient),
                  ("matches_forward", RationalFunction(solution) == forward)]
        return make_document("compress",
                             symbol=serializers.symbol(omega),
                             result={"r1": serializers.poly(r1_poly),
                                     "r": serializers.poly(solution),
                                     "division_route": serializers.poly(quotient)},
                             checks=serializers.checks(verified(checks))), None

    def selftest(self):
        """
        Run the verification corpus.
        """
        try:
            seed, from_environment = seed_from_environment()
        except ValueError as error:
            raise ParseError(0, "integer seed", str(error))
        if not from_environment:
            self.logger.info("TOEPLITZ_LAB_SEED not set, using seed %s", seed)
        results = run_corpus(seed, only=self.args.only, workers=self.args.workers,
                             scale=self.args.scale, config=self.config)
        summary = results.get_summary()
        summary["duration"] = serializers.round_float(summary["duration"])
        summary["seed_from_environment"] = from_environment
        checks = []
        for result in results:
            check = {"name": "{}/{}/{}".format(result.suite, result.case, result.name),
                     "status": result.get_verdict()}
            if result.failure:
                check["reason"] = result.fail_reason
            checks.append(check)
        return make_document("selftest", result=summary, checks=checks), results
