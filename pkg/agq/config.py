"""
Configuration for agq runs.

Settings are loaded from environment variables, after an optional ``.env`` file
in the working directory has been read.

Optional environment variables:
    AGQ_SEED        - Seed for randomized distance search (default: 0). Overrides --seed.
    AGQ_BUDGET      - Cap on enumerated words or supports (default: 2**24)
    AGQ_WORKERS     - Worker processes for distance enumeration (default: 1)
    AGQ_TRIALS      - Random information sets per upper-bound search (default: 100)
    AGQ_ISD_LEVEL   - Highest Brouwer-Zimmermann level (default: 2)
    AGQ_LOG_LEVEL   - Logging level (default: WARNING)
"""

import logging
import os
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from dotenv import load_dotenv

from agq.codes.distance import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TRIALS
from agq.codes.linear import CodeParameterError
from agq.curves import CurveKind, new_curve
from agq.field import e_from_q

log = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw, 0)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


@dataclass
class Settings:
    """
    Defaults for CLI runs, loaded from environment variables on initialization.

    Only ``seed`` takes precedence over the matching command-line flag; the other
    values are defaults that flags override.
    """

    seed: int = DEFAULT_SEED
    seed_from_env: bool = False
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    trials: int = DEFAULT_TRIALS
    isd_level: int = 2
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        self.seed_from_env = bool(os.getenv("AGQ_SEED", "").strip())
        self.seed = _env_int("AGQ_SEED", self.seed)
        self.budget = _env_int("AGQ_BUDGET", self.budget)
        self.workers = _env_int("AGQ_WORKERS", self.workers)
        self.trials = _env_int("AGQ_TRIALS", self.trials)
        self.isd_level = _env_int("AGQ_ISD_LEVEL", self.isd_level)
        self.log_level = os.getenv("AGQ_LOG_LEVEL", self.log_level).upper()

    def validate(self) -> None:
        if self.seed < 0:
            raise ValueError(f"AGQ_SEED must be >= 0, got {self.seed}")
        if self.budget < 1:
            raise ValueError(f"AGQ_BUDGET must be positive, got {self.budget}")
        if self.workers < 1:
            raise ValueError(f"AGQ_WORKERS must be positive, got {self.workers}")
        if self.trials < 0:
            raise ValueError(f"AGQ_TRIALS must be >= 0, got {self.trials}")
        if self.isd_level < 1:
            raise ValueError(f"AGQ_ISD_LEVEL must be positive, got {self.isd_level}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"AGQ_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got '{self.log_level}'")


def load_settings() -> Settings:
    """Read ./.env (without overriding the real environment) and build validated settings."""
    load_dotenv(Path.cwd() / ".env", override=False)
    loaded = Settings()
    loaded.validate()
    return loaded


# ----------------------------------------------------------------------
# Per-invocation configuration
# ----------------------------------------------------------------------
class Command(str, Enum):
    CONSTRUCT = "construct"
    VERIFY = "verify"
    DISTANCE = "distance"
    QUANTUM = "quantum"
    SCAN = "scan"
    TABLE = "table"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_m_range(text: str) -> range:
    """'5' -> range(5, 6); '3..6' -> range(3, 7) (both ends inclusive)."""
    match = _RANGE.match(text)
    if match is None:
        raise ValueError(f"m must be an integer or a range 'a..b', got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise ValueError(f"empty m range {text!r}")
    return range(lo, hi + 1)


def resolve_e(q: int | None, e: int | None) -> int:
    """Exactly one of q, e; q must be a power of two."""
    if (q is None) == (e is None):
        raise ValueError("give exactly one of --q and --e")
    return e if e is not None else e_from_q(q)  # type: ignore[arg-type]


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI command needs, already resolved from flags and settings."""

    command: Command
    curve: CurveKind | None = None
    e: int | None = None
    ms: range | None = None
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    trials: int = DEFAULT_TRIALS
    isd_level: int = 2
    workers: int = 1
    format: OutputFormat = OutputFormat.JSON
    output: str | None = None
    stabilizer: bool = False
    certify: bool = True

    @property
    def q(self) -> int | None:
        return None if self.e is None else 1 << self.e

    def validate(self) -> None:
        """
        Raises:
            UnsupportedFieldError: e outside 1..6.
            CurveParameterError: curve b with even e.
            CodeParameterError: m range outside [0, n).
        """
        if self.budget < 1 or self.workers < 1 or self.isd_level < 1 or self.trials < 0:
            raise ValueError("budget, workers and isd-level must be positive, trials non-negative")
        if self.command is Command.TABLE:
            return
        if self.curve is None or self.e is None or self.ms is None:
            raise ValueError(f"{self.command.value} needs --curve, --q or --e, and --m")
        curve = new_curve(self.curve, self.e)
        if self.ms.start < 0 or self.ms.stop - 1 >= curve.n:
            raise CodeParameterError(
                f"m range {self.ms.start}..{self.ms.stop - 1} is outside [0, {curve.n}) for {curve!r}"
            )
