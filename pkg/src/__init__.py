"""
Proxylight: proxy low-light image generation by band-pass Fourier amplitude fusion
"""

__version__ = "1.0.0"
