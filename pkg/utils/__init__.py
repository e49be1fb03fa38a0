"""
Utility functions for the preprojective Hochschild toolkit.
"""

from utils.file_utils import (
    load_json,
    save_json,
    ensure_directory,
    generate_report_path,
    DirectoryManager,
    FileOperationError
)
from utils.logging_utils import setup_logging, progress_enabled
from utils.serialization import (
    format_rational,
    parse_rational,
    matrix_to_json,
    matrix_from_json,
    combination_to_json,
    combination_from_json,
    combination_to_text,
    SerializationError
)

__all__ = [
    'load_json',
    'save_json',
    'ensure_directory',
    'generate_report_path',
    'DirectoryManager',
    'FileOperationError',
    'setup_logging',
    'progress_enabled',
    'format_rational',
    'parse_rational',
    'matrix_to_json',
    'matrix_from_json',
    'combination_to_json',
    'combination_from_json',
    'combination_to_text',
    'SerializationError'
]
