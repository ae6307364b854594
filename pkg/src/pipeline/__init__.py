"""
End-to-end pipeline: configuration, orchestration and reports
"""

from .config import PipelineConfig
from .orchestrator import describe, virtualize
from .report import PipelineReport, PipelineStatus

__all__ = [
    'PipelineConfig',
    'describe',
    'virtualize',
    'PipelineReport',
    'PipelineStatus',
]
