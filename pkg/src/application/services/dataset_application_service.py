"""
Application service for proxy dataset generation.

Every well-lit input is paired with a seeded exemplar draw, translated,
and written; failures are recorded per input and the run goes on.
Results are collected in input order, so the manifest and the output
files do not depend on the worker count.
"""

import logging
import time
from functools import lru_cache, partial
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Union

from ...core.entities import (
    DatasetManifest,
    FailureRecord,
    GenerationTask,
    LowLightPool,
    ManifestEntry,
    RasterImage,
    TranslationParams
)
from ...core.interfaces import DatasetServiceInterface
from ...domain.dataset import GenerationPlanner
from ...domain.fusion import translate
from ...infrastructure.io import ImageRepository, write_jsonl
from ...infrastructure.parallel import BatchExecutor
from ...infrastructure.sampling import ExemplarSampler
from ...shared.exceptions import ErrorContextManager, ImageIOError, ProxyLightError
from ...shared.logging import LogLevel, configure_logging, current_level

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.jsonl"
FAILURES_NAME = "failures.jsonl"

_repository = ImageRepository()


@lru_cache(maxsize=32)
def _load_exemplar(path: str) -> RasterImage:
    # Decoded once per process; RasterImage is read-only so sharing is safe
    return _repository.load(path)


def run_generation_task(task: GenerationTask) -> Union[ManifestEntry, FailureRecord]:
    """
    Translate and write one input.

    Top-level so it can be shipped to worker processes.
    """
    try:
        i_well = _repository.load(task.input_path)
        i_low = _load_exemplar(task.exemplar_path)
        result = translate(i_well, i_low, task.params)
        _repository.save(result.image, task.output_path, task.image_format)
    except (ProxyLightError, OSError, ValueError) as e:
        context = ErrorContextManager.create_context(e, include_stack_trace=False,
                                                     input_path=task.input_path)
        logger.debug("Generation task failed", extra={'detail': ErrorContextManager.format_context(context)})
        return FailureRecord(index=task.index, input_path=task.input_path,
                             error_type=context.error_type, error_message=context.error_message)
    return ManifestEntry(
        input_path=task.input_path,
        exemplar_path=task.exemplar_path,
        params=task.params,
        seed=task.seed,
        output_path=task.output_path,
        degenerate_band=result.degenerate_band
    )


class DatasetApplicationService(DatasetServiceInterface):
    """
    Application service for dataset generation.

    Plans the run in the domain layer and executes it through the
    ordered worker pool.
    """

    def __init__(self, workers: int = 1, image_format: str = "png", show_progress: bool = True,
                 log_level: Optional[LogLevel] = None):
        """
        Initialize the service.

        Args:
            workers: Worker processes; 1 runs serially
            image_format: Output format (png or jpeg)
            show_progress: Whether to draw a progress bar
            log_level: Level for worker-process logging; the package logger's
                current level when omitted
        """
        self.workers = workers
        self.image_format = image_format
        self.show_progress = show_progress
        self.log_level = log_level

    def _worker_initializer(self) -> Optional[Callable[[], object]]:
        # Spawned workers start with unconfigured logging
        if self.workers == 1:
            return None
        return partial(configure_logging, level=self.log_level or current_level())

    def generate(
        self,
        d_well: Sequence[str],
        pool: Union[LowLightPool, Sequence[str]],
        params: TranslationParams,
        seed: int,
        out_dir: str
    ) -> DatasetManifest:
        """
        Produce one proxy per well-lit input and write the manifest.

        Args:
            d_well: Well-lit image files, in output order
            pool: Exemplar files (at least one)
            params: Translation parameters
            seed: Base seed of the exemplar draws
            out_dir: Output directory

        Returns:
            DatasetManifest: Entries in input order plus failures

        Raises:
            ArgumentError: If the pool is empty or the parameters are invalid
            ImageIOError: If the output directory cannot be written
        """
        if not isinstance(pool, LowLightPool):
            pool = LowLightPool(pool)
        params.ensure_valid()

        out_root = Path(out_dir)
        try:
            out_root.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ImageIOError(f"Cannot create output directory ({e.strerror or e})",
                               path=str(out_root)) from e

        planner = GenerationPlanner(ExemplarSampler(seed).draw)
        tasks = planner.plan(list(d_well), pool, params, seed, str(out_root), self.image_format)

        started = time.perf_counter()
        executor = BatchExecutor(workers=self.workers, show_progress=self.show_progress,
                                 desc="Generating proxies")
        outcomes = executor.map(run_generation_task, tasks, initializer=self._worker_initializer())
        elapsed = time.perf_counter() - started

        manifest = self._collect(outcomes)
        manifest.manifest_path = out_root / MANIFEST_NAME
        write_jsonl(manifest.manifest_path, (entry.to_dict() for entry in manifest.entries))
        if manifest.failures:
            write_jsonl(out_root / FAILURES_NAME, (f.to_dict() for f in manifest.failures))

        logger.info("Generation finished", extra={
            'ok': manifest.ok_count, 'failed': manifest.failed_count, 'workers': self.workers,
            'elapsed_s': round(elapsed, 3),
            'images_per_s': round(len(tasks) / elapsed, 2) if elapsed > 0 else None,
            'out_dir': str(out_root), 'seed': seed, **params.to_dict()
        })
        return manifest

    @staticmethod
    def _collect(outcomes: List[Union[ManifestEntry, FailureRecord]]) -> DatasetManifest:
        manifest = DatasetManifest()
        for outcome in outcomes:
            if isinstance(outcome, FailureRecord):
                logger.error("Proxy generation failed", extra={
                    'input_path': outcome.input_path, 'error_type': outcome.error_type,
                    'error_message': outcome.error_message
                })
                manifest.failures.append(outcome)
            else:
                if outcome.degenerate_band:
                    logger.warning("Degenerate frequency band", extra={'input_path': outcome.input_path})
                manifest.entries.append(outcome)
        return manifest

