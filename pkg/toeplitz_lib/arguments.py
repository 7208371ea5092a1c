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

arguments module contains the command line argument parser configuration for toeplitz-lab.
"""

import argparse

COMMANDS = ["analyze", "adjoint", "selfadjoint", "apply", "pair", "szego", "canonical",
            "compress", "helson", "selftest"]

# Commands that take the symbol given by --s and --q.
SYMBOL_COMMANDS = ["analyze", "adjoint", "selfadjoint", "apply", "szego", "canonical",
                   "compress"]


def get_parser():
    """
    Get a new ArgumentParser.

    :return: ArgumentParser
    """
    parser = argparse.ArgumentParser(description='Unbounded Toeplitz operators with rational '
                                                 'symbols: structure, adjoints and selfadjoint '
                                                 'extensions')
    return parser


def get_base_arguments(parser):
    """
    Append toeplitz-lab arguments to parser.

    :param parser: argument parser
    :return: ArgumentParser
    """
    parser.add_argument("command",
                        nargs="?",
                        choices=COMMANDS,
                        help="Operation to run")
    parser.add_argument('--version',
                        action='store_true',
                        default=False,
                        help='Show version')

    symbol_group = parser.add_argument_group("Symbol", "The symbol omega = s/q as ascending "
                                                       "coefficient lists, e.g. "
                                                       "'[\"-i\", \"-i\"]'")
    symbol_group.add_argument("--s", default=None, help="Numerator coefficients")
    symbol_group.add_argument("--q", default=None, help="Denominator coefficients")
    symbol_group.add_argument("--p",
                              default="2",
                              help="Hardy space exponent label in (1, inf), rational literal. "
                                   "Default is 2")
    symbol_group.add_argument("--mode",
                              default="exact",
                              choices=["exact", "numeric"],
                              help="exact fails when a kernel basis needs numeric root "
                                   "factors, numeric reports the dimensions without the basis. "
                                   "Default is exact")
    symbol_group.add_argument("--tol",
                              type=float,
                              default=None,
                              help="Root classification tolerance, overrides tolerances.tau")

    operation_group = parser.add_argument_group("Operation inputs")
    operation_group.add_argument("--k", type=int, default=None, help="Helson family index k")
    operation_group.add_argument("--h", default=None,
                                 help="apply: polynomial h of f = q h + r")
    operation_group.add_argument("--r", default=None,
                                 help="apply: polynomial r of f = q h + r, degree below m")
    operation_group.add_argument("--v", default=None,
                                 help="apply: polynomial v of the adjoint input g = q# v. "
                                      "Default is 1")
    operation_group.add_argument("--lambda", dest="lambda_", default=None,
                                 help="szego: point of the open unit disk, complex literal")
    operation_group.add_argument("--r1", default=None,
                                 help="compress: polynomial r1 of degree below m")
    operation_group.add_argument("--f-num", dest="f_num", default=None,
                                 help="pair: numerator of f")
    operation_group.add_argument("--f-den", dest="f_den", default='["1"]',
                                 help="pair: denominator of f. Default is 1")
    operation_group.add_argument("--g-num", dest="g_num", default=None,
                                 help="pair: numerator of g")
    operation_group.add_argument("--g-den", dest="g_den", default='["1"]',
                                 help="pair: denominator of g. Default is 1")
    operation_group.add_argument("--emit-curve", dest="emit_curve", default=None,
                                 metavar="FILE",
                                 help="analyze: write theta,re,im samples of omega on the "
                                      "circle as CSV")

    selftest_group = parser.add_argument_group("Selftest", "Built-in verification corpus, "
                                                           "seeded by TOEPLITZ_LAB_SEED")
    selftest_group.add_argument("--only", nargs="+", default=None, metavar="SUITE",
                                help="Run only the named suites")
    selftest_group.add_argument("--workers", type=int, default=None,
                                help="Worker threads, default from selftest.workers")
    selftest_group.add_argument("--scale", type=float, default=1.0,
                                help="Factor on the randomized corpus sizes. Default is 1.0")

    output_group = parser.add_argument_group("Output and logging")
    output_group.add_argument("--json", action="store_true", default=False,
                              help="Emit the report as JSON instead of tables")
    output_group.add_argument('-v', "--verbose",
                              dest='verbose',
                              default=0,
                              help="increase output verbosity, max 2 times.",
                              action="count")
    output_group.add_argument('-s', '--silent',
                              action='store_true',
                              dest='silent',
                              default=False,
                              help='Silent mode, only warnings and errors are logged')
    output_group.add_argument('--color',
                              default=False,
                              action="store_true",
                              help='Indicates if console logs are printed plain'
                                   ' or with colours. Default is False for plain'
                                   ' logs.')
    output_group.add_argument('--log',
                              default=None,
                              metavar="DIR",
                              help='Also write a log file into a new run directory under DIR')
    output_group.add_argument("--logging_cfg",
                              help="Location of JSON configuration for logging.",
                              default=None)
    output_group.add_argument("--config",
                              default=None,
                              metavar="FILE",
                              help="JSON file with tolerances and sampling settings")
    output_group.add_argument('--cfg_file',
                              type=open,
                              action=LoadFromFile,
                              help="Load options from a file, one argument per line. The "
                                   "command itself stays on the command line.")
    return parser


class LoadFromFile(argparse.Action):  # pylint: disable=too-few-public-methods
    """
    Action to load more arguments into parser from a file.
    """
    def __call__(self, parser, namespace, values, option_string=None):
        with values as fil:
            data = [line.strip() for line in fil.read().splitlines()]
            data = [line for line in data if line and not line.startswith("#")]
            if "--cfg_file" in data:
                index = data.index("--cfg_file")
                if index + 1 < len(data) and data[index + 1] == fil.name:
                    del data[index + 1]
                    del data[index]
            command = getattr(namespace, "command", None)
            parser.parse_args(data, namespace)
            # An absent optional positional resets to its default on every parse.
            if namespace.command is None:
                namespace.command = command
