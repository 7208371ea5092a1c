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

ResultList module, contains the ResultList class, which is an object to store Result objects.
"""

from toeplitz_lib.Result import Result


class ResultList(object):
    """
    List of Result objects.
    """
    def __init__(self):
        self.data = []
        self.seed = None

    def get(self, index=0):
        """
        Get object with index index.

        :param index: int
        :return: Result
        """
        return self.data[index]

    def append(self, result):
        """
        Append a new Result to the list.

        :param result: Result to append
        :return: Nothing
        :raises: TypeError if result is not Result or ResultList
        """
        if isinstance(result, Result):
            self.data.append(result)
        elif isinstance(result, ResultList):
            self.data += result.data
        else:
            raise TypeError('unknown result type')

    def count(self):
        """
        :return: number of results
        """
        return len(self.data)

    def success_count(self):
        """
        Amount of passed checks in this list.

        :return: integer
        """
        return len([result for result in self.data if result.success])

    def failure_count(self):
        """
        Amount of failed checks in this list.

        :return: integer
        """
        return len([result for result in self.data if result.failure])

    def skip_count(self):
        """
        Amount of checks that did not apply.

        :return: integer
        """
        return len([result for result in self.data if result.skip])

    @property
    def failure(self):
        """
        If any check failed, return True, else False.

        :return: Boolean
        """
        return any(result.failure for result in self.data)

    @property
    def success(self):
        """
        :return: True if nothing failed
        """
        return not self.failure

    def get_verdict(self):
        """
        :return: "pass" or "fail"
        """
        return "fail" if self.failure else "pass"

    def total_duration(self):
        """
        Sum of the durations of the checks in this list.

        :return: float seconds
        """
        return sum(result.duration for result in self.data)

    def pass_rate(self):
        """
        Pass rate over the checks that ran, skips excluded.

        :return: Percentage in format .2f %
        """
        success = self.success_count()
        try:
            val = 100.0 * success / (success + self.failure_count())
        except ZeroDivisionError:
            val = 0
        return format(val, '.2f') + " %"

    def get_summary(self):
        """
        Get a summary of this ResultLists contents as dictionary.

        :return: dictionary
        """
        return {
            "count": self.count(),
            "pass": self.success_count(),
            "fail": self.failure_count(),
            "skip": self.skip_count(),
            "pass_rate": self.pass_rate(),
            "duration": self.total_duration(),
            "seed": self.seed.value if self.seed is not None else None,
            "verdict": self.get_verdict()
        }

    def failures(self):
        """
        :return: list of failed Result objects
        """
        return [result for result in self.data if result.failure]

    def __len__(self):
        return len(self.data)

    def __iter__(self):
        return iter(self.data)
