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

import logging
import os
import shutil
import tempfile
import unittest

import mock
from jsonschema import ValidationError

import toeplitz_lib.LogManager as LogManager
from toeplitz_lib.LogManager import ContextFilter, LabFormatter, get_component_logger


def create_log_record(message):
    return logging.makeLogRecord({"msg": message})


def fixture(name):
    return os.path.abspath(os.path.join(__file__, os.path.pardir, "tests", name))


class ComponentLoggerTests(unittest.TestCase):

    def tearDown(self):
        LogManager.finish_logging()

    def test_adapter_adds_source(self):
        logger = get_component_logger("unittest_component", "UTC")
        self.assertEqual(logger.extra["source"], "UTC")
        self.assertIs(get_component_logger("unittest_component", "UTC"), logger)
        self.assertEqual(logger.logger.name, "toeplitz.unittest_component")
        self.assertTrue(logger.logger.propagate)

    def test_short_name_updated(self):
        get_component_logger("unittest_renamed", "AAA")
        self.assertEqual(get_component_logger("unittest_renamed", "BBB").extra["source"], "BBB")

    def test_name_required(self):
        with self.assertRaises(ValueError):
            get_component_logger("")

    def test_get_logger(self):
        self.assertEqual(LogManager.get_logger().name, "toeplitz")
        self.assertEqual(LogManager.get_logger("rootloc").name, "toeplitz.rootloc")


class BaseLoggingTests(unittest.TestCase):

    def tearDown(self):
        LogManager.finish_logging()

    def _stream_handler(self):
        handlers = [handler for handler in logging.getLogger("toeplitz").handlers
                    if type(handler) is logging.StreamHandler]  # pylint: disable=unidiomatic-typecheck
        self.assertEqual(len(handlers), 1)
        return handlers[0]

    def test_default_level_info(self):
        LogManager.init_base_logging()
        self.assertEqual(self._stream_handler().level, logging.INFO)

    def test_verbose_level_debug(self):
        LogManager.init_base_logging(verbose=1)
        self.assertEqual(self._stream_handler().level, logging.DEBUG)

    def test_silent_level_warning(self):
        LogManager.init_base_logging(verbose=2, silent=True)
        self.assertEqual(self._stream_handler().level, logging.WARN)

    def test_file_logging(self):
        directory = tempfile.mkdtemp()
        try:
            LogManager.init_base_logging(directory=directory, no_file=False)
            logfiles = LogManager.get_logfiles()
            self.assertEqual(len(logfiles), 1)
            self.assertTrue(logfiles[0].startswith(directory))
            get_component_logger("unittest_file", "UTF").warning("written to file")
            LogManager.finish_logging()
            with open(logfiles[0]) as logfile:
                self.assertIn("written to file", logfile.read())
        finally:
            shutil.rmtree(directory)

    @mock.patch("toeplitz_lib.LogManager.os.makedirs", side_effect=OSError)
    def test_existing_log_directory(self, mock_makedirs):
        with self.assertRaises(OSError):
            LogManager.init_base_logging(directory="unused", no_file=False)
        self.assertTrue(mock_makedirs.called)


class ConfigFileTests(unittest.TestCase):
    def setUp(self):
        self.original_config = LogManager.LOGGING_CONFIG

    def test_configs_read(self):
        with self.assertRaises(IOError):
            LogManager.init_base_logging(config_location=fixture("does_not_exist.json"))
        LogManager._read_config(fixture("logging_config.json"))

    def test_configs_merge(self):
        LogManager._read_config(fixture("logging_config.json"))
        self.assertDictEqual(LogManager.LOGGING_CONFIG.get("test_logger"), {"level": "ERROR"})
        self.assertIn("ToeplitzManager", LogManager.LOGGING_CONFIG)

    def test_configs_schema_validation(self):
        with self.assertRaises(ValidationError):
            LogManager._read_config(fixture("erroneous_logging_config.json"))

    def tearDown(self):
        LogManager.LOGGING_CONFIG = self.original_config
        LogManager.finish_logging()


class ContextFilterTest(unittest.TestCase):
    def setUp(self):
        self.contextfilter = ContextFilter()

    def test_short_message_untouched(self):
        record = create_log_record("aaa=")
        self.contextfilter.filter(record)
        self.assertEqual("aaa=", record.msg)

    def test_long_message_truncated(self):
        msg = "a" * ContextFilter.MAXIMUM_LENGTH
        record = create_log_record(msg)
        self.contextfilter.filter(record)
        expected = "a" * 50 + "...[9950 more bytes]"
        self.assertEqual(expected, record.msg)

    def test_nested_values_truncated(self):
        record = create_log_record({"poly": ["b" * (ContextFilter.MAXIMUM_LENGTH + 1)]})
        self.contextfilter.filter(record)
        self.assertEqual(record.msg["poly"][0], "b" * 50 + "...[9951 more bytes]")


class FormatterTest(unittest.TestCase):

    def test_missing_source(self):
        formatter = LabFormatter("%(source)s|%(message)s", "%Y-%m-%dT%H:%M:%S.%FZ")
        self.assertEqual(formatter.format(create_log_record("hello")), "   |hello")

    def test_time_format_milliseconds(self):
        formatter = LabFormatter("%(asctime)s", "%Y-%m-%dT%H:%M:%S.%FZ")
        record = create_log_record("hello")
        record.created = 0
        record.msecs = 7
        self.assertEqual(formatter.format(record), "1970-01-01T00:00:00.007Z")


if __name__ == '__main__':
    unittest.main()
