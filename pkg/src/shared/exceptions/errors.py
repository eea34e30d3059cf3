"""
Exception types for the proxylight pipeline.

The CLI maps these onto its exit-code contract: argument errors exit
with status 2, decode and I/O errors with status 1.
"""

from typing import Optional


class ProxyLightError(Exception):
    """Base class for all proxylight errors."""


class ArgumentError(ProxyLightError, ValueError):
    """Raised when a precondition or parameter constraint is violated."""


class ImageDecodeError(ProxyLightError):
    """
    Raised when encoded image bytes cannot be decoded.

    Attributes:
        image_format: Detected (or expected) container format, if known
        source: File path or other label for the offending input
    """

    def __init__(
        self,
        message: str,
        image_format: Optional[str] = None,
        source: Optional[str] = None
    ):
        self.image_format = image_format
        self.source = source
        parts = [message]
        if image_format:
            parts.append(f"format={image_format}")
        if source:
            parts.append(f"source={source}")
        super().__init__(" | ".join(parts))


class ImageIOError(ProxyLightError):
    """Raised when an image file cannot be read or written."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{message}: {path}" if path else message)
