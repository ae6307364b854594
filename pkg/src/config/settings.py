from pathlib import Path
from typing import Dict, Optional, Union

from dotenv import dotenv_values

# Cover search settings
MAX_COVER_DEGREE = 8
REGULARIZATION_CAP = 10_000
SEARCH_MODE = "direct"
SEARCH_MODES = ['direct', 'per-diagonal']

# Factorization check settings
FACTORIZATION_SAMPLES = 100
SAMPLE_SEED = 0
MAX_SAMPLE_WORD_LENGTH = 12

# Logging
LOG_LEVEL = "INFO"
LOG_FILE: Optional[str] = None

# File settings
MAX_FILE_SIZE = 10 * 1024 * 1024  # 10 MB
SUPPORTED_FORMATS = ['.vtc', '.json']
COMPLEX_FORMAT = "vtc-1"
REPORT_FORMAT = "vtr-1"

# Keys a settings file may override, with their types
OVERRIDABLE = {
    'MAX_COVER_DEGREE': int,
    'REGULARIZATION_CAP': int,
    'SEARCH_MODE': str,
    'FACTORIZATION_SAMPLES': int,
    'SAMPLE_SEED': int,
    'LOG_LEVEL': str,
    'LOG_FILE': str,
}


def load_settings_file(path: Union[str, Path]) -> Dict[str, object]:
    """Parse a dotenv-style settings file into typed overrides.

    Only the file is read; the process environment is left alone.
    """
    from src.core.errors import InputError

    if not Path(path).is_file():
        raise InputError(f"Settings file not found: {path}")

    overrides: Dict[str, object] = {}
    for key, raw in dotenv_values(path).items():
        if key not in OVERRIDABLE:
            raise InputError(f"Unknown setting '{key}' in {path}")
        if raw is None or raw == "":
            raise InputError(f"Setting '{key}' in {path} has no value")
        try:
            overrides[key] = OVERRIDABLE[key](raw)
        except ValueError:
            raise InputError(f"Setting '{key}' in {path} is not a valid {OVERRIDABLE[key].__name__}: {raw}")
    return overrides
