import logging
from dataclasses import dataclass
from typing import Dict, Optional

from src.config import settings
from src.core.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    max_degree: int = settings.MAX_COVER_DEGREE
    cap: int = settings.REGULARIZATION_CAP
    mode: str = settings.SEARCH_MODE
    order: str = "default"
    resume: Optional[str] = None
    max_reps: Optional[int] = None
    samples: int = settings.FACTORIZATION_SAMPLES
    seed: int = settings.SAMPLE_SEED
    output: Optional[str] = None
    report_output: Optional[str] = None

    @property
    def per_diagonal(self) -> bool:
        return self.mode == "per-diagonal"

    @classmethod
    def from_settings(cls, overrides: Optional[Dict[str, object]] = None, **flags) -> "PipelineConfig":
        """Defaults, then settings-file overrides, then flags that are not None."""
        overrides = overrides or {}
        values = {
            "max_degree": overrides.get("MAX_COVER_DEGREE", settings.MAX_COVER_DEGREE),
            "cap": overrides.get("REGULARIZATION_CAP", settings.REGULARIZATION_CAP),
            "mode": overrides.get("SEARCH_MODE", settings.SEARCH_MODE),
            "samples": overrides.get("FACTORIZATION_SAMPLES", settings.FACTORIZATION_SAMPLES),
            "seed": overrides.get("SAMPLE_SEED", settings.SAMPLE_SEED),
        }
        unknown = set(flags) - set(cls.__dataclass_fields__)
        if unknown:
            raise InputError(f"Unknown pipeline option(s): {', '.join(sorted(unknown))}")
        values.update({k: v for k, v in flags.items() if v is not None})
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        if self.max_degree < 1:
            raise InputError(f"max degree must be positive, got {self.max_degree}")
        if self.cap < 1:
            raise InputError(f"regularization cap must be positive, got {self.cap}")
        if self.mode not in settings.SEARCH_MODES:
            raise InputError(f"search mode must be one of {settings.SEARCH_MODES}, got '{self.mode}'")
        if self.max_reps is not None and self.max_reps < 1:
            raise InputError(f"max reps must be positive, got {self.max_reps}")
        if self.samples < 0:
            raise InputError(f"factorization samples must not be negative, got {self.samples}")
