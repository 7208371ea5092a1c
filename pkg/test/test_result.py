# pylint: disable=missing-docstring

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
"""

import unittest

from toeplitz_lib.Result import Result
from toeplitz_lib.ResultList import ResultList
from toeplitz_lib.Randomize.seed import SeedInteger


def make_result(verdict, duration=1):
    return Result({"suite": "unit", "case": "case", "name": "check",
                   "verdict": verdict, "duration": duration})


class ResultTestcase(unittest.TestCase):

    def test_defaults(self):
        result = Result()
        self.assertTrue(result.skip)
        self.assertFalse(result.success)
        self.assertFalse(result.failure)
        self.assertEqual(result.framework_info["name"], "toeplitz-lab")

    def test_set_verdict(self):
        result = Result({"name": "kernel_dim"})
        result.set_verdict("FAIL", reason="dimension 1 != 2", duration=0.5)
        self.assertTrue(result.failure)
        self.assertEqual(result.fail_reason, "dimension 1 != 2")
        self.assertEqual(result.duration, 0.5)
        result.set_verdict("pass")
        self.assertEqual(result.fail_reason, "dimension 1 != 2")
        self.assertTrue(result.success)

    def test_unknown_verdict(self):
        with self.assertRaises(ValueError):
            Result().set_verdict("inconclusive")

    def test_to_dict(self):
        result = Result({"suite": "rootloc", "case": "r1", "name": "counts",
                         "verdict": "fail", "reason": "mismatch"})
        self.assertDictEqual(result.to_dict(), {"suite": "rootloc", "case": "r1",
                                                "name": "counts", "status": "fail",
                                                "reason": "mismatch"})


class ResultListTestcase(unittest.TestCase):

    def test_counts(self):
        results = ResultList()
        results.append(make_result("pass"))
        results.append(make_result("fail", 2))
        results.append(make_result("skip", 0))
        self.assertEqual(results.count(), 3)
        self.assertEqual(len(results), 3)
        self.assertEqual(results.success_count(), 1)
        self.assertEqual(results.failure_count(), 1)
        self.assertEqual(results.skip_count(), 1)
        self.assertEqual(results.total_duration(), 3)
        self.assertEqual(results.pass_rate(), "50.00 %")
        self.assertTrue(results.failure)
        self.assertFalse(results.success)
        self.assertEqual(results.get_verdict(), "fail")
        self.assertEqual(results.failures(), [results.get(1)])

    def test_append_list(self):
        first = ResultList()
        first.append(make_result("pass"))
        second = ResultList()
        second.append(make_result("pass"))
        second.append(first)
        self.assertEqual(second.count(), 2)
        with self.assertRaises(TypeError):
            second.append("pass")

    def test_empty(self):
        results = ResultList()
        self.assertEqual(results.pass_rate(), "0.00 %")
        self.assertEqual(results.get_verdict(), "pass")
        self.assertIsNone(results.get_summary()["seed"])

    def test_summary(self):
        results = ResultList()
        results.seed = SeedInteger(42)
        results.append(make_result("pass"))
        results.append(make_result("skip"))
        summary = results.get_summary()
        self.assertEqual(summary["count"], 2)
        self.assertEqual(summary["pass"], 1)
        self.assertEqual(summary["skip"], 1)
        self.assertEqual(summary["pass_rate"], "100.00 %")
        self.assertEqual(summary["seed"], 42)
        self.assertEqual(summary["verdict"], "pass")
        self.assertEqual([result.get_verdict() for result in results], ["pass", "skip"])


if __name__ == '__main__':
    unittest.main()
