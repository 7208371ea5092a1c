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

Configuration handling helpers. Numeric tolerances and sampling sizes live here.
"""

import copy
import json
import os

import jsonschema
from jsonmerge import merge
from pydash import get

DEFAULT_CONFIG = {
    "tolerances": {
        "tau": 1e-9,
        "reconstruction": 1e-10,
        "fejer_riesz": 1e-10,
        "pairing": 1e-8,
        "phase": 1e-12,
        "polish": 1e-13
    },
    "sampling": {
        "arc_samples": 512,
        "circle_points": 512
    },
    "numeric": {
        "max_iterations": 500
    },
    "selftest": {
        "workers": 4
    }
}


class LabConfiguration(object):
    """
    Read-only view over the merged configuration dictionary. Library functions take an optional
    LabConfiguration and fall back to DEFAULT_CONFIGURATION.
    """
    def __init__(self, config=None):
        self._config = copy.deepcopy(DEFAULT_CONFIG)
        if config:
            self._config = merge(self._config, config)

    @classmethod
    def from_file(cls, config_location):
        """
        Read a JSON configuration file, validate it and merge it over the defaults.

        :param config_location: path to file
        :return: LabConfiguration
        :raises: IOError, ValueError, jsonschema.ValidationError
        """
        with open(config_location, "r") as config_file:
            user_config = json.load(config_file)
        with open(os.path.abspath(os.path.join(__file__,
                                               os.path.pardir,
                                               "config_schema.json"))) as schema_file:
            jsonschema.validate(user_config, json.load(schema_file))
        return cls(user_config)

    def get(self, path, default=None):
        """
        Dotted path lookup, for example "tolerances.tau".

        :param path: str
        :param default: value returned when the path is missing
        :return: value
        """
        return get(self._config, path, default)

    def with_overrides(self, overrides):
        """
        :param overrides: dict merged over the current values
        :return: new LabConfiguration
        """
        return LabConfiguration(merge(self._config, overrides))

    @property
    def config(self):
        """
        :return: deep copy of the configuration dictionary
        """
        return copy.deepcopy(self._config)

    @property
    def tau(self):
        """
        Classification tolerance on |root| - 1.
        """
        return self.get("tolerances.tau")

    @property
    def reconstruction(self):
        """
        Maximum relative coefficient error of numeric factor reconstruction.
        """
        return self.get("tolerances.reconstruction")

    @property
    def fejer_riesz(self):
        """
        Maximum residual of the canonical form identities on circle samples.
        """
        return self.get("tolerances.fejer_riesz")

    @property
    def pairing(self):
        """
        Relative tolerance for matching reciprocal root pairs.
        """
        return self.get("tolerances.pairing")

    @property
    def phase(self):
        """
        Tolerance on the imaginary part of a(0).
        """
        return self.get("tolerances.phase")

    @property
    def polish(self):
        """
        Aberth stopping tolerance.
        """
        return self.get("tolerances.polish")

    @property
    def arc_samples(self):
        """
        Samples per arc between consecutive poles.
        """
        return self.get("sampling.arc_samples")

    @property
    def circle_points(self):
        """
        Equispaced circle points for residual checks.
        """
        return self.get("sampling.circle_points")

    @property
    def max_iterations(self):
        """
        Iteration cap of the Aberth root polisher.
        """
        return self.get("numeric.max_iterations")

    @property
    def workers(self):
        """
        Worker threads for the selftest runner.
        """
        return self.get("selftest.workers")


DEFAULT_CONFIGURATION = LabConfiguration()


def resolve(config):
    """
    :param config: LabConfiguration or None
    :return: config, or DEFAULT_CONFIGURATION for None
    """
    return DEFAULT_CONFIGURATION if config is None else config
