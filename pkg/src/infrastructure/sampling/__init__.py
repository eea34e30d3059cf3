from .exemplar_sampler import ExemplarSampler

__all__ = ['ExemplarSampler']
