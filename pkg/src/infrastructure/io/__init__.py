"""Filesystem access for images and line-delimited records."""

from .image_repository import IMAGE_SUFFIXES, ImageRepository
from .record_writer import read_jsonl, write_json, write_jsonl

__all__ = ['IMAGE_SUFFIXES', 'ImageRepository', 'read_jsonl', 'write_json', 'write_jsonl']
