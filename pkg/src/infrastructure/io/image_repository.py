"""
Image files on disk.

Listing, loading and saving of PNG/JPEG files, translating OS and
codec failures into the package's error types.
"""

import logging
from pathlib import Path
from typing import List, Union

from ...core.entities import GrayMap, RasterImage
from ...domain.imaging import decode_image, encode_image, normalize_format
from ...shared.exceptions import ImageIOError

logger = logging.getLogger(__name__)

IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg")

PathLike = Union[str, Path]


class ImageRepository:
    """Reads and writes images and grayscale maps."""

    @staticmethod
    def list_images(directory: PathLike) -> List[str]:
        """
        Image files directly inside a directory.

        Matches .png, .jpg and .jpeg in any letter case.

        Returns:
            List[str]: Paths sorted by file name

        Raises:
            ImageIOError: If the directory does not exist
        """
        root = Path(directory)
        if not root.is_dir():
            raise ImageIOError("Not a directory", path=str(root))
        files = [p for p in root.iterdir() if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES]
        return [str(p) for p in sorted(files, key=lambda p: p.name)]

    @staticmethod
    def read_bytes(path: PathLike) -> bytes:
        try:
            return Path(path).read_bytes()
        except OSError as e:
            raise ImageIOError(f"Cannot read image ({e.strerror or e})", path=str(path)) from e

    def load(self, path: PathLike) -> RasterImage:
        """
        Decode an image file.

        Raises:
            ImageIOError: If the file cannot be read
            ImageDecodeError: If the contents are not a valid PNG/JPEG
        """
        return decode_image(self.read_bytes(path), source=str(path))

    def load_gray_map(self, path: PathLike, bounded: bool = True) -> GrayMap:
        """Decode an image file as a single-channel map in [0, 1]."""
        return GrayMap.from_image(self.load(path), bounded=bounded)

    @staticmethod
    def save(image: RasterImage, path: PathLike, image_format: str = "png") -> str:
        """
        Encode and write an image, creating parent directories.

        Returns:
            str: The written path

        Raises:
            ImageIOError: If the file cannot be written
        """
        target = Path(path)
        data = encode_image(image, normalize_format(image_format))
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(data)
        except OSError as e:
            raise ImageIOError(f"Cannot write image ({e.strerror or e})", path=str(target)) from e
        logger.debug("Wrote image", extra={'path': str(target), 'bytes': len(data)})
        return str(target)
