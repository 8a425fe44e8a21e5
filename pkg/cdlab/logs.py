# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 cdlab contributors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""Logger factory; handlers write to stderr so stdout stays machine readable."""

import logging
from typing import Dict

from aea.helpers.logging import setup_logger


LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

_loggers: Dict[str, logging.Logger] = {}
_level = logging.WARNING


def get_logger(name: str) -> logging.Logger:
    """
    Get a module logger.

    :param name: dotted logger name, e.g. `cdlab.linalg`.
    :return: the configured logger.
    """
    if name not in _loggers:
        logger = setup_logger(name, level=_level, log_format=LOG_FORMAT)
        logger.propagate = False
        _loggers[name] = logger
    return _loggers[name]


def set_level(level: str) -> None:
    """
    Set the level of every cdlab logger, including ones created later.

    :param level: a level name such as `INFO`.
    """
    global _level  # pylint: disable=global-statement
    numeric = logging.getLevelName(level.upper())
    _level = numeric if isinstance(numeric, int) else logging.WARNING
    for logger in _loggers.values():
        logger.setLevel(_level)
