"""
File I/O and schema helpers
"""

from .file_processor import FileProcessor
from .schema import (
    ComplexDocument, ReportDocument, complex_from_document, complex_to_document, dumps,
    parse_complex, parse_document, validate_report,
)

__all__ = [
    'FileProcessor',
    'ComplexDocument',
    'ReportDocument',
    'complex_from_document',
    'complex_to_document',
    'dumps',
    'parse_complex',
    'parse_document',
    'validate_report',
]
