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

runner module, executes the selftest corpus suites on a thread pool and collects one Result per
named check.
"""

import time
from multiprocessing.pool import ThreadPool

from toeplitz_lib.Configurations import resolve
from toeplitz_lib.LogManager import get_component_logger
from toeplitz_lib.Randomize.randomize import Randomize
from toeplitz_lib.Result import Result
from toeplitz_lib.ResultList import ResultList
from toeplitz_lib.SelfTest.corpus import SUITES, SUITE_NAMES
from toeplitz_lib.ToeplitzErrors import DomainError, ToeplitzLabError


def _logger():
    return get_component_logger("selftest", "SLF")


def select_suites(only=None):
    """
    :param only: list of suite names or None for all
    :return: list of (index, name, suite function) in corpus order
    :raises: DomainError for an unknown suite name
    """
    only = list(only or [])
    unknown = [name for name in only if name not in SUITE_NAMES]
    if unknown:
        raise DomainError("Unknown selftest suite(s) {}, choose from {}".format(
            ", ".join(unknown), ", ".join(SUITE_NAMES)))
    return [(index, name, suite) for index, (name, suite) in enumerate(SUITES)
            if not only or name in only]


def run_case(suite_name, case_label, func):
    """
    Run one case. Library errors turn into a single failed Result.

    :return: list of Result
    """
    start = time.time()
    try:
        checks = func()
    except ToeplitzLabError as error:
        return [Result({"suite": suite_name, "case": case_label, "name": "case",
                        "verdict": "fail", "reason": "{}: {}".format(type(error).__name__, error),
                        "duration": time.time() - start})]
    duration = (time.time() - start) / max(1, len(checks))
    results = []
    for name, status in checks:
        if status is None:
            verdict = "skip"
        else:
            verdict = "pass" if status else "fail"
        results.append(Result({"suite": suite_name, "case": case_label, "name": name,
                               "verdict": verdict, "duration": duration,
                               "reason": "" if status is not False else "check failed"}))
    return results


def run_corpus(seed, only=None, workers=None, scale=1.0, config=None):
    """
    Run the selected suites. Every suite draws from its own stream derived from seed, so a
    suite's cases do not depend on which other suites run.

    :param seed: SeedInteger
    :param only: list of suite names or None
    :param workers: thread count, config selftest.workers by default
    :param scale: factor on the randomized corpus sizes
    :param config: LabConfiguration or None
    :return: ResultList
    :raises: DomainError for an unknown suite or a non-positive scale or worker count
    """
    config = resolve(config)
    workers = config.workers if workers is None else workers
    if workers < 1:
        raise DomainError("selftest needs at least one worker, got {}".format(workers))
    if not scale > 0:
        raise DomainError("selftest scale must be positive, got {}".format(scale))
    results = ResultList()
    results.seed = seed
    logger = _logger()
    logger.info("selftest seed %s, %d worker(s), scale %s", seed, workers, scale)
    pool = ThreadPool(workers)
    try:
        for index, name, suite in select_suites(only):
            cases = suite(Randomize(seed.derive(index)), scale, config)
            async_results = [pool.apply_async(func=run_case, args=(name, label, func))
                             for label, func in cases]
            for async_result in async_results:
                for result in async_result.get():
                    logger.info("%s %s %s: %s", result.suite, result.case, result.name,
                                result.get_verdict())
                    results.append(result)
    finally:
        pool.close()
        pool.join()
    return results
