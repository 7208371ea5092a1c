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

Result module, contains the Result class which stores the verdict and metadata of a single
selftest check for reporting purposes.
"""

from toeplitz_lib.tools.tools import get_fw_name, get_fw_version

VERDICTS = ['pass', 'fail', 'skip']


class Result(object):
    """
    Result object, used for storing the outcome of one selftest check.
    """
    def __init__(self, kwargs=None):
        kwargs = {} if kwargs is None else kwargs
        self.__verdict = 'skip'
        self.suite = kwargs.get("suite", '')
        self.name = kwargs.get("name", '')
        self.case = kwargs.get("case", '')
        self.duration = kwargs.get("duration", 0)
        self.fail_reason = kwargs.get("reason", '')
        self.framework_info = {
            "name": kwargs.get("fw_name", get_fw_name()),
            "version": kwargs.get("fw_version", get_fw_version())
        }
        if "verdict" in kwargs:
            self.set_verdict(kwargs.get("verdict"))

    @property
    def success(self):
        """
        :return: True if the check passed
        """
        return self.__verdict == 'pass'

    @property
    def failure(self):
        """
        :return: True if the check failed
        """
        return self.__verdict == 'fail'

    @property
    def skip(self):
        """
        :return: True if the check did not apply
        """
        return self.__verdict == 'skip'

    def get_verdict(self):
        """
        :return: verdict
        """
        return self.__verdict

    def set_verdict(self, verdict, reason=None, duration=None):
        """
        Set the final verdict for this Result.

        :param verdict: Verdict, must be from ['pass', 'fail', 'skip']
        :param reason: failure description
        :param duration: check duration in seconds
        :return: Nothing
        :raises: ValueError if verdict was unknown.
        """
        verdict = verdict.lower()
        if verdict not in VERDICTS:
            raise ValueError("Unknown verdict {}".format(verdict))
        self.__verdict = verdict
        if reason is not None:
            self.fail_reason = reason
        if duration is not None:
            self.duration = duration

    def to_dict(self):
        """
        :return: dict with the report fields of this check
        """
        return {"suite": self.suite, "name": self.name, "case": self.case,
                "status": self.get_verdict(), "reason": self.fail_reason}
