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

ReportConsole module, contains the ReportConsole class which renders reports as PrettyTable
text.
"""

import json

from prettytable import PrettyTable

from toeplitz_lib.Reports.ReportBase import ReportBase, SECTIONS

MAX_CELL_WIDTH = 100


def flatten(section, prefix=""):
    """
    Flatten nested dicts to dotted keys; lists and leaves become cell text.

    :param section: dict
    :return: list of (key, text) sorted by key
    """
    rows = []
    for key in sorted(section):
        value = section[key]
        name = "{}.{}".format(prefix, key) if prefix else key
        if isinstance(value, dict):
            rows += flatten(value, name)
        elif isinstance(value, (list, tuple)):
            rows.append((name, json.dumps(value)))
        else:
            rows.append((name, "-" if value is None else str(value)))
    return rows


def _cell(text):
    return text if len(text) <= MAX_CELL_WIDTH else text[:MAX_CELL_WIDTH - 3] + "..."


class ReportConsole(ReportBase):
    """
    ReportConsole class, renders every present section as a two column table, the checks as a
    verdict table and, for selftest runs, a per suite table with a summary table.
    """
    def generate(self, *args, **kwargs):
        """
        :return: report text
        """
        if self.results is not None:
            return self._selftest_tables()
        parts = ["command: {}".format(self.document["command"])]
        for name in SECTIONS[1:-1]:
            section = self.document.get(name)
            if section is None:
                continue
            table = PrettyTable([name, "value"])
            table.align = "l"
            for key, text in flatten(section):
                table.add_row([key, _cell(text)])
            parts.append(table.get_string())
        if self.document.get("checks"):
            table = PrettyTable(["check", "status"])
            table.align = "l"
            for check in self.document["checks"]:
                table.add_row([check["name"], check["status"]])
            parts.append(table.get_string())
        return "\n".join(parts)

    def _selftest_tables(self):
        suites = {}
        order = []
        for result in self.results:
            if result.suite not in suites:
                suites[result.suite] = {"pass": 0, "fail": 0, "skip": 0}
                order.append(result.suite)
            suites[result.suite][result.get_verdict()] += 1
        table = PrettyTable(["Suite", "pass", "fail", "skip"])
        for suite in order:
            counts = suites[suite]
            table.add_row([suite, counts["pass"], counts["fail"], counts["skip"]])
        parts = [table.get_string()]

        failures = self.results.failures()
        if failures:
            table = PrettyTable(["Suite", "Case", "Check", "Fail Reason"])
            table.align = "l"
            for result in failures:
                table.add_row([result.suite, result.case, result.name,
                               _cell(result.fail_reason)])
            parts.append(table.get_string())

        table = PrettyTable(['Summary', ''])
        table.add_row(["Final Verdict", self.summary["verdict"].upper()])
        table.add_row(["count", str(self.summary["count"])])
        table.add_row(["passrate", self.summary["pass_rate"]])
        if self.summary["pass"] > 0:
            table.add_row(["pass", str(self.summary["pass"])])
        if self.summary["fail"] > 0:
            table.add_row(["fail", str(self.summary["fail"])])
        if self.summary["skip"] > 0:
            table.add_row(["skip", str(self.summary["skip"])])
        table.add_row(["Duration", self.duration_to_string(self.summary["duration"])])
        table.add_row(["Seed", str(self.summary["seed"])])
        parts.append(table.get_string())
        return "\n".join(parts)
