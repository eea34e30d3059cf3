from .batch_executor import BatchExecutor

__all__ = ['BatchExecutor']
