#!/usr/bin/env python3
"""
Main entry point for the virtual triangulation toolkit.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

from src.cli import cli


def setup_logging(level: str = "INFO", log_file: Optional[str] = None):
    """Setup logging configuration. Stdout stays free for command output."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def main(argv=None) -> int:
    try:
        return cli(argv, setup_logging=setup_logging)
    except KeyboardInterrupt:
        logging.getLogger(__name__).info("Stopped by user (Ctrl+C)")
        return 130


if __name__ == "__main__":
    sys.exit(main())
