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

"""Exceptions raised by the laboratory."""

from typing import Any, Optional


class CDLabError(Exception):
    """Base class for every error raised by cdlab."""


class UsageError(CDLabError, ValueError):
    """An operation was called with arguments it does not accept (levels, caps)."""


class DomainError(CDLabError, ZeroDivisionError):
    """Arithmetic outside the domain of the field, i.e. division by zero."""


class PreconditionError(CDLabError, ValueError):
    """A stated precondition of an operation does not hold."""


class ParseError(CDLabError, ValueError):
    """Malformed literal or document."""

    def __init__(self, message: str, text: str = "", position: int = 0) -> None:
        """
        Initialize the error.

        :param message: what went wrong.
        :param text: the text being parsed.
        :param position: offset of the offending character in `text`.
        """
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class IdentityViolation(CDLabError, RuntimeError):
    """A construction failed to satisfy one of its defining identities."""

    def __init__(self, identity: str, witness: Optional[Any] = None) -> None:
        """
        Initialize the error.

        :param identity: name of the identity that failed.
        :param witness: serializable data exhibiting the failure.
        """
        super().__init__(f"Identity `{identity}` does not hold")
        self.identity = identity
        self.witness = witness
