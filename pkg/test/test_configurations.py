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

import os
import unittest

from jsonschema import ValidationError

from toeplitz_lib.Configurations import LabConfiguration, DEFAULT_CONFIGURATION, resolve


def fixture(name):
    return os.path.abspath(os.path.join(__file__, os.path.pardir, "tests", name))


class LabConfigurationTests(unittest.TestCase):

    def test_defaults(self):
        config = LabConfiguration()
        self.assertEqual(config.tau, 1e-9)
        self.assertEqual(config.reconstruction, 1e-10)
        self.assertEqual(config.fejer_riesz, 1e-10)
        self.assertEqual(config.pairing, 1e-8)
        self.assertEqual(config.phase, 1e-12)
        self.assertEqual(config.polish, 1e-13)
        self.assertEqual(config.arc_samples, 512)
        self.assertEqual(config.circle_points, 512)
        self.assertEqual(config.max_iterations, 500)
        self.assertEqual(config.workers, 4)

    def test_dotted_get(self):
        config = LabConfiguration()
        self.assertEqual(config.get("sampling.arc_samples"), 512)
        self.assertIsNone(config.get("sampling.missing"))
        self.assertEqual(config.get("missing.path", 3), 3)

    def test_partial_merge(self):
        config = LabConfiguration({"tolerances": {"tau": 1e-6}})
        self.assertEqual(config.tau, 1e-6)
        self.assertEqual(config.pairing, 1e-8)

    def test_with_overrides_leaves_original(self):
        config = LabConfiguration()
        changed = config.with_overrides({"numeric": {"max_iterations": 10}})
        self.assertEqual(changed.max_iterations, 10)
        self.assertEqual(config.max_iterations, 500)
        self.assertEqual(changed.tau, config.tau)

    def test_config_is_copy(self):
        config = LabConfiguration()
        values = config.config
        values["tolerances"]["tau"] = 1.0
        self.assertEqual(config.tau, 1e-9)

    def test_from_file(self):
        config = LabConfiguration.from_file(fixture("lab_config.json"))
        self.assertEqual(config.tau, 1e-8)
        self.assertEqual(config.circle_points, 64)
        self.assertEqual(config.arc_samples, 512)

    def test_from_file_invalid(self):
        with self.assertRaises(ValidationError):
            LabConfiguration.from_file(fixture("erroneous_lab_config.json"))

    def test_from_file_missing(self):
        with self.assertRaises(IOError):
            LabConfiguration.from_file(fixture("no_such_config.json"))

    def test_from_file_not_json(self):
        with self.assertRaises(ValueError):
            LabConfiguration.from_file(fixture("not_json.txt"))

    def test_resolve(self):
        self.assertIs(resolve(None), DEFAULT_CONFIGURATION)
        config = LabConfiguration()
        self.assertIs(resolve(config), config)


if __name__ == '__main__':
    unittest.main()
