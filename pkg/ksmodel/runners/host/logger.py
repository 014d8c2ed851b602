#
# Copyright (C) 2026 The ksmodel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import datetime
import logging
import os
import sys

from ksmodel.runners.host import utils

log_line_format = "%(asctime)s.%(msecs).03d %(levelname)s %(message)s"
# The micro seconds are added by the format string above,
# so the time format does not include ms.
log_line_time_format = "%m-%d %H:%M:%S"

log_severity_map = {
    "ERROR": logging.ERROR,
    "WARNING": logging.WARNING,
    "INFO": logging.INFO,
    "DEBUG": logging.DEBUG,
}

_FILE_LOG_LEVELS = ("ERROR", "INFO", "DEBUG")


def getLogFileTimestamp():
    """Returns a timestamp in the format used for log file names."""
    return datetime.datetime.now().strftime("%m-%d-%Y_%H-%M-%S-%f")[:-3]


def setupLogger(log_path=None, prefix=None, filename=None,
                log_severity="INFO"):
    """Customizes the root logger for a command run.

    The logger always gets a stream handler on stderr; stdout is left to the
    machine-readable output of the commands. If log_path is given, one log
    file per level in _FILE_LOG_LEVELS is written there as well.

    Args:
        log_path: Location of the log files, or None for no files.
        prefix: A prefix for each log line in terminal.
        filename: Base name of the log files. The default is the time the
                  logger is requested.
        log_severity: string, severity level of the stream handler.

    Returns:
        A string, abs path of the base log file name, or None without
        log_path.
    """
    log = logging.getLogger()
    killLogger(log)
    log.setLevel(logging.DEBUG)

    terminal_format = log_line_format
    if prefix:
        terminal_format = "[{}] {}".format(prefix, log_line_format)
    c_formatter = logging.Formatter(terminal_format, log_line_time_format)
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(c_formatter)
    ch.setLevel(log_severity_map.get(str(log_severity).upper(), logging.INFO))
    log.addHandler(ch)

    if not log_path:
        return None

    if filename is None:
        filename = getLogFileTimestamp()
    utils.create_dir(log_path)
    idx = filename.rfind('.')
    if idx < 0:
        idx = len(filename)
    for level in _FILE_LOG_LEVELS:
        addLogFile(log_path=log_path,
                   filename=filename[:idx] + '_' + level + filename[idx:],
                   log_severity=level)
    return os.path.join(utils.abs_path(log_path), filename)


def addLogFile(log_path, filename, log_severity="INFO"):
    """Creates a log file and adds the handler to the root logger.

    Args:
        log_path: Location of the log file.
        filename: Name of the log file.
        log_severity: string, lowest level written to this file.

    Returns:
        A string, abs path to the created log file.
        logging.FileHandler instance which is added to the logger.
    """
    f_formatter = logging.Formatter(log_line_format, log_line_time_format)
    fh = logging.FileHandler(os.path.join(log_path, filename))
    fh.setFormatter(f_formatter)
    fh.setLevel(log_severity_map.get(log_severity, logging.INFO))
    logging.getLogger().addHandler(fh)
    return os.path.join(log_path, filename), fh


def killLogger(logger):
    """Cleans up the handlers attached to a logger object.

    Args:
        logger: The logging object to clean up.
    """
    for h in list(logger.handlers):
        if isinstance(h, logging.FileHandler):
            h.close()
        logger.removeHandler(h)
