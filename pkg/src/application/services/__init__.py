"""Application services orchestrating the domain and infrastructure layers."""

from .dataset_application_service import (
    FAILURES_NAME,
    MANIFEST_NAME,
    DatasetApplicationService,
    run_generation_task
)
from .evaluation_application_service import EvaluationApplicationService, summary_path
from .translation_application_service import TranslationApplicationService

__all__ = [
    'FAILURES_NAME',
    'MANIFEST_NAME',
    'DatasetApplicationService',
    'EvaluationApplicationService',
    'TranslationApplicationService',
    'run_generation_task',
    'summary_path'
]
