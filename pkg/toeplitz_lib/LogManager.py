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

LogManager module contains all logging related methods,
classes and helpers used by toeplitz-lab.
"""

import datetime
import json
import logging
import os

import jsonschema
import jsonmerge
import pytz


COLORS = True
try:
    import coloredlogs
except ImportError:
    COLORS = False

# Module level logging state, same as the handlers it configures.
# pylint: disable=global-statement
LOGGING_CONFIG = {
    "ToeplitzManager": {
        "format": "%(asctime)s | %(source)s %(message)s",
        "dateformat": "%Y-%m-%dT%H:%M:%S.%FZ",
        "level": "INFO",
        "truncate_logs": {"truncate": True, "max_len": 10000, "reveal_len": 50},
        "file": {
            "format": "%(asctime)s | %(source)s %(levelname)s %(threadName)s: %(message)s",
            "dateformat": "%Y-%m-%dT%H:%M:%S.%FZ",
            "level": "DEBUG",
            "name": "toeplitz.log"
        }
    },
    "library": {
        "format": "%(asctime)s | %(source)s %(levelname)s %(threadName)s: %(message)s",
        "dateformat": "%Y-%m-%dT%H:%M:%S.%FZ",
        "level": "DEBUG",
        "truncate_logs": {"truncate": True, "max_len": 10000, "reveal_len": 50}
    }
}

DEFAULT_LOGGING_CONFIG = {
    "format": "%(asctime)s | %(source)s %(levelname)s %(threadName)s: %(message)s",
    "dateformat": "%Y-%m-%dT%H:%M:%S.%FZ",
    "level": "INFO",
    "truncate_logs": {"truncate": True, "max_len": 10000, "reveal_len": 50},
    "file": {
        "format": "%(asctime)s | %(source)s %(levelname)s %(threadName)s: %(message)s",
        "dateformat": "%Y-%m-%dT%H:%M:%S.%FZ",
        "level": "DEBUG",
        "name": "toeplitz.log"
    }
}

ROOT_LOGGER_NAME = "toeplitz"
LOGPATHDIR = None  # Path to run log directory
LOGGERS = {}
GLOBAL_LOGFILES = []
TRUNCATE_LOG = True


LEVEL_FORMATS = dict(
    debug=dict(color='white'),
    info=dict(color='green'),
    verbose=dict(color='blue'),
    warning=dict(color='yellow'),
    error=dict(color='red'),
    critical=dict(color='red'))

FIELD_STYLES = dict(
    asctime=dict(color='cyan'),
    levelname=dict(color='black'),
    name=dict(color='blue'),
    threadName=dict(color='blue'),
    source=dict(color='blue'))

# Library loggers stay silent until init_base_logging attaches real handlers.
logging.getLogger(ROOT_LOGGER_NAME).addHandler(logging.NullHandler())


class LabLoggerAdapter(logging.LoggerAdapter):
    """
    Adapter to add field 'source' to logger.
    """
    def process(self, msg, kwargs):
        if "extra" not in kwargs:
            kwargs["extra"] = {}
        kwargs["extra"]["source"] = self.extra["source"]
        return msg, kwargs


def _format_time(converter, record, datefmt):
    date_and_time = converter(record.created, tz=pytz.utc)
    if "%F" in datefmt:
        msec = "%03d" % record.msecs
        datefmt = datefmt.replace("%F", msec)
    return date_and_time.strftime(datefmt)


class LabFormatter(logging.Formatter):
    """
    Handle time zone conversion to UTC and append milliseconds on %F.
    Records without a source get a blank one.
    """
    converter = datetime.datetime.fromtimestamp

    def formatTime(self, record, datefmt=None):
        return _format_time(self.converter, record, datefmt or DEFAULT_LOGGING_CONFIG["dateformat"])

    def format(self, record):
        if not hasattr(record, "source"):
            record.source = "   "
        return super(LabFormatter, self).format(record)


def _colored_formatter(fmt, datefmt):
    """
    Build a coloredlogs formatter. coloredlogs is an optional dependency.

    :raises: ImportError if coloredlogs is missing
    """
    if not COLORS:
        raise ImportError("Missing coloredlogs module. Please install with "
                          "pip to use colors in logging.")

    class ColoredLabFormatter(coloredlogs.ColoredFormatter):
        """
        Defined here because coloredlogs is an optional dependency.
        """
        converter = datetime.datetime.fromtimestamp

        def formatTime(self, record, datefmt=None):
            return _format_time(self.converter, record,
                                datefmt or DEFAULT_LOGGING_CONFIG["dateformat"])

        def format(self, record):
            if not hasattr(record, "source"):
                record.source = "   "
            return super(ColoredLabFormatter, self).format(record)

    return ColoredLabFormatter(fmt, datefmt, LEVEL_FORMATS, FIELD_STYLES)


def remove_handlers(logger):
    """
    Remove handlers from logger.

    :param logger: Logger whose handlers to remove
    """
    if hasattr(logger, "handlers"):
        for handler in logger.handlers[::-1]:
            if isinstance(handler, logging.FileHandler):
                handler.close()
            logger.removeHandler(handler)


def get_base_dir():
    """
    Return the directory where logs for this run will be stored
    """
    return LOGPATHDIR


def get_base_logfilename(logname):
    """ Return filename for a logfile, filename will contain the actual path +
    filename

    :param logname: Name of the log including the extension
    """
    fname = os.path.join(get_base_dir(), logname)
    GLOBAL_LOGFILES.append(fname)
    return fname


def get_logfiles():
    """
    Return a list of logfiles written during this run.
    """
    return list(GLOBAL_LOGFILES)


def get_logger(name=None):
    """
    Return the toeplitz logger or one of its children.

    :param name: child name or None for the top level logger
    """
    if not name:
        return logging.getLogger(ROOT_LOGGER_NAME)
    return logging.getLogger(ROOT_LOGGER_NAME + "." + name)


def _check_existing_logger(loggername, short_name):
    """
    Check if logger with name loggername exists.

    :param loggername: Name of logger.
    :param short_name: Shortened name for the logger.
    :return: Logger or None
    """
    if loggername in LOGGERS:
        if LOGGERS[loggername].extra.get("source") != short_name:
            LOGGERS[loggername].extra["source"] = short_name
        return LOGGERS[loggername]
    return None


def _truncation_filter(logger_config):
    cfilter = ContextFilter()
    trunc_logs = logger_config.get("truncate_logs", DEFAULT_LOGGING_CONFIG["truncate_logs"])
    # pylint: disable=invalid-name
    cfilter.MAXIMUM_LENGTH = trunc_logs.get(
        "max_len", DEFAULT_LOGGING_CONFIG["truncate_logs"]["max_len"])
    cfilter.REVEAL_LENGTH = trunc_logs.get(
        "reveal_len", DEFAULT_LOGGING_CONFIG["truncate_logs"]["reveal_len"])
    return cfilter


def get_component_logger(name, short_name="   "):
    """
    Return a logger adapter for a library component. Component loggers are children of the
    toeplitz logger and propagate to it, so they emit nothing until init_base_logging has run.

    :param name: component name, for example "rootloc"
    :param short_name: three letter tag shown in the source field
    :return: LabLoggerAdapter
    """
    if not name:
        raise ValueError("Can't make a logger without name")
    loggername = ROOT_LOGGER_NAME + "." + name
    logger = _check_existing_logger(loggername, short_name)
    if logger is not None:
        return logger
    logger_config = LOGGING_CONFIG.get("library", DEFAULT_LOGGING_CONFIG)
    logger = get_logger(name)
    logger.propagate = True
    logger.setLevel(getattr(logging, logger_config.get("level", "DEBUG")))
    if TRUNCATE_LOG and logger_config.get("truncate_logs", {}).get("truncate", True):
        logger.addFilter(_truncation_filter(logger_config))
    LOGGERS[loggername] = LabLoggerAdapter(logger, {"source": short_name})
    return LOGGERS[loggername]


def _add_filehandler(logger, logpath, formatter=None, name="ToeplitzManager"):
    """
    Adds a FileHandler to logger.

    :param logger: Logger.
    :param logpath: Path to file.
    :param formatter: Formatter to be used
    :param name: Name for logger
    :return: Logger
    """
    config = LOGGING_CONFIG.get(name, {}).get("file", DEFAULT_LOGGING_CONFIG.get("file"))
    if formatter is None:
        formatter = LabFormatter(config.get("format"), config.get("dateformat"))
    handler = _get_filehandler_with_formatter(logpath, formatter)
    handler.setLevel(getattr(logging, config.get("level", "DEBUG")))
    logger.addHandler(handler)
    return logger


def _get_filehandler_with_formatter(logname, formatter=None):
    """ Return a logging FileHandler for given logname using a given
    logging formatter
    :param logname: Name of the file where logs will be stored
    :param formatter: An instance of logging.Formatter or None if the default
    should be used
    :return: FileHandler
    """
    handler = logging.FileHandler(logname)
    if formatter is not None:
        handler.setFormatter(formatter)
    return handler


# pylint: disable=too-many-arguments
def init_base_logging(directory="./log", verbose=0, silent=False, color=False, no_file=True,
                      truncate=True, config_location=None):
    """
    Initialize toeplitz-lab logging: the console handler of the toeplitz logger and, when
    no_file is False, a log file in a fresh run directory under directory.

    :param directory: Directory where to store the resulting logs
    :param verbose: Log level as integer
    :param silent: Log level warning
    :param color: Log coloring
    :param no_file: Skip file logging
    :param truncate: Log truncating
    :param config_location: Location of config file.
    :raises IOError if unable to read configuration file.
    :raises OSError if log path already exists.
    :raises ImportError if colored logging was requested but coloredlogs module is not installed.
    """
    global LOGPATHDIR
    global TRUNCATE_LOG

    if config_location:
        try:
            _read_config(config_location)
        except IOError as error:
            raise IOError("Unable to read from configuration file {}: {}".format(config_location,
                                                                                 error))
        except jsonschema.SchemaError as error:
            raise jsonschema.SchemaError("Logging configuration schema "
                                         "file malformed: {}".format(error))

    manager_config = LOGGING_CONFIG.get("ToeplitzManager")
    toeplitzlogger = logging.getLogger(ROOT_LOGGER_NAME)
    toeplitzlogger.propagate = False
    remove_handlers(toeplitzlogger)
    for old_filter in toeplitzlogger.filters[::-1]:
        toeplitzlogger.removeFilter(old_filter)
    toeplitzlogger.setLevel(logging.DEBUG)

    stream_handler = logging.StreamHandler()
    if color:
        stream_handler.setFormatter(_colored_formatter(manager_config.get("format"),
                                                       manager_config.get("dateformat")))
    else:
        stream_handler.setFormatter(LabFormatter(manager_config.get("format"),
                                                 manager_config.get("dateformat")))

    if not no_file:
        LOGPATHDIR = os.path.join(directory, datetime.datetime.now().strftime(
            "%Y-%m-%d_%H%M%S.%f").rstrip("0"))
        try:
            os.makedirs(LOGPATHDIR)
        except OSError:
            raise OSError("Log path %s already exists." % LOGPATHDIR)
        filename = manager_config.get("file").get("name", "toeplitz.log")
        _add_filehandler(toeplitzlogger, get_base_logfilename(filename))
    if verbose and not silent:
        stream_handler.setLevel(logging.DEBUG)
    elif silent:
        stream_handler.setLevel(logging.WARN)
    else:
        stream_handler.setLevel(getattr(logging, manager_config.get("level")))
    toeplitzlogger.addHandler(stream_handler)
    TRUNCATE_LOG = truncate
    if TRUNCATE_LOG:
        toeplitzlogger.addFilter(_truncation_filter(manager_config))


def finish_logging():
    """
    Close file handlers and forget component loggers.
    """
    remove_handlers(logging.getLogger(ROOT_LOGGER_NAME))
    logging.getLogger(ROOT_LOGGER_NAME).addHandler(logging.NullHandler())
    LOGGERS.clear()
    del GLOBAL_LOGFILES[:]


class ContextFilter(logging.Filter):  # pylint: disable=too-few-public-methods
    """
    Filter for filtering logging messages and truncating them after MAXIMUM_LENGTH has been reached.
    """
    MAXIMUM_LENGTH = 10000
    REVEAL_LENGTH = 50

    def filter(self, record):
        """
        Filter record
        :param record: Record to filter
        :return: True
        """
        maximum = self.MAXIMUM_LENGTH
        reveal = self.REVEAL_LENGTH

        def modify(value):
            """
            Truncate strings longer than the maximum, keeping the first reveal characters.
            """
            if isinstance(value, str):
                if len(value) < maximum:
                    return value
                return "{}...[{} more bytes]".format(value[:reveal], len(value) - reveal)
            elif isinstance(value, bytes):
                return "{}...[{} more bytes]".format(repr(value[:reveal]), len(value) - reveal)
            return value

        record.msg = traverse_json_obj(record.msg, callback=modify)
        return True


def traverse_json_obj(obj, path=None, callback=None):
    """
    Recursively loop through object and perform the function defined
    in callback for every element. Only JSON data types are supported.
    :param obj: object to traverse
    :param path: current path
    :param callback: callback executed on every element
    :return: potentially altered object
    """
    if path is None:
        path = []

    if isinstance(obj, dict):
        value = {k: traverse_json_obj(v, path + [k], callback)
                 for k, v in obj.items()}
    elif isinstance(obj, list):
        value = [traverse_json_obj(elem, path + [[]], callback)
                 for elem in obj]
    else:
        value = obj

    if callback is None:
        return value
    return callback(value)


def _read_config(config_location):
    """
    Read configuration for logging from a json file. Merges the read dictionary to LOGGING_CONFIG.

    :param config_location: Location of file.
    :return: nothing.
    """
    global LOGGING_CONFIG
    with open(config_location, "r") as config_loc:
        cfg_file = json.load(config_loc)
        if "logging" in cfg_file:
            log_dict = cfg_file.get("logging")
            with open(os.path.abspath(os.path.join(__file__,
                                                   os.path.pardir,
                                                   'logging_schema.json'))) as schema_file:
                logging_schema = json.load(schema_file)
                jsonschema.validate(log_dict, logging_schema)
                merged = jsonmerge.merge(LOGGING_CONFIG, log_dict)
                LOGGING_CONFIG = merged
