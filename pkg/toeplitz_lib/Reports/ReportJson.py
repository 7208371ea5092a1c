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

ReportJson module, contains the ReportJson class which emits the machine readable report.
"""

import json
import os

import jsonschema

from toeplitz_lib.Reports.ReportBase import ReportBase


def load_schema():
    """
    :return: the report JSON schema shipped with the package
    """
    with open(os.path.abspath(os.path.join(__file__, os.path.pardir, os.path.pardir,
                                           "report_schema.json"))) as schema_file:
        return json.load(schema_file)


class ReportJson(ReportBase):
    """
    Validated JSON with sorted keys and two space indent, byte identical for identical input.
    """
    def generate(self, *args, **kwargs):
        """
        :return: JSON text
        :raises: jsonschema.ValidationError if the document breaks the report schema
        """
        jsonschema.validate(self.document, load_schema())
        return json.dumps(self.document, sort_keys=True, indent=2, separators=(",", ": "))
