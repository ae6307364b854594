"""
Configuration management
"""

from .settings import *

__all__ = [
    'MAX_COVER_DEGREE',
    'REGULARIZATION_CAP',
    'SEARCH_MODE',
    'SEARCH_MODES',
    'FACTORIZATION_SAMPLES',
    'SAMPLE_SEED',
    'MAX_SAMPLE_WORD_LENGTH',
    'LOG_LEVEL',
    'LOG_FILE',
    'MAX_FILE_SIZE',
    'SUPPORTED_FORMATS',
    'COMPLEX_FORMAT',
    'REPORT_FORMAT',
    'load_settings_file',
]
