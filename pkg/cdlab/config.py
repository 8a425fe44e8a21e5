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

"""Laboratory configuration."""

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from cdlab.errors import UsageError


LAB_CONFIGS = Path(__file__).parent / "configs" / "lab.json"


@dataclass(frozen=True)
class LabConfig:  # pylint: disable=too-many-instance-attributes
    """Lab configuration"""

    level_cap: int
    construction_cap: int
    seed: int
    trials: int
    workers: int
    log_level: str
    allow_large: bool = False

    def __post_init__(self) -> None:
        """Post initialization to override with environment variables."""
        level_cap = os.getenv("CDLAB_LEVEL_CAP")
        if level_cap:
            object.__setattr__(self, "level_cap", int(level_cap))

        construction_cap = os.getenv("CDLAB_CONSTRUCTION_CAP")
        if construction_cap:
            object.__setattr__(self, "construction_cap", int(construction_cap))

        seed = os.getenv("CDLAB_SEED")
        if seed:
            object.__setattr__(self, "seed", int(seed))

        trials = os.getenv("CDLAB_TRIALS")
        if trials:
            object.__setattr__(self, "trials", int(trials))

        workers = os.getenv("CDLAB_WORKERS")
        if workers:
            object.__setattr__(self, "workers", int(workers))

        log_level = os.getenv("CDLAB_LOG_LEVEL")
        if log_level:
            object.__setattr__(self, "log_level", log_level.upper())

    def with_large(self, allow_large: bool = True) -> "LabConfig":
        """Return a copy with the level caps lifted (or restored)."""
        return replace(self, allow_large=allow_large)

    def check_level(self, n: int, construction: bool = False) -> None:
        """
        Refuse levels above the configured cap.

        :param n: the Cayley-Dickson level.
        :param construction: use the (lower) construction cap.
        :raises UsageError: when the level is negative or above the cap.
        """
        if n < 0:
            raise UsageError(f"Level must be non-negative, got {n}")
        if self.allow_large:
            return
        cap = self.construction_cap if construction else self.level_cap
        if n > cap:
            raise UsageError(
                f"Level {n} exceeds the cap {cap}; pass --allow-large to lift it"
            )


def get_lab_config(profile: Optional[str] = None) -> LabConfig:
    """Get `LabConfig` configuration"""
    with open(LAB_CONFIGS, "r", encoding="UTF-8") as file:
        data = json.load(file)

        if profile is None:
            profile = next(iter(data))

        if profile not in data:
            raise UsageError(
                f"Unknown configuration profile `{profile}`; available={list(data)}"
            )

        return LabConfig(**data[profile])


_active_config: Optional[LabConfig] = None


def active_config() -> LabConfig:
    """Return the configuration in effect for this process."""
    global _active_config  # pylint: disable=global-statement
    if _active_config is None:
        _active_config = get_lab_config()
    return _active_config


def set_active_config(config: LabConfig) -> None:
    """Install `config` as the configuration in effect for this process."""
    global _active_config  # pylint: disable=global-statement
    _active_config = config
