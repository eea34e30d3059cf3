"""Cross-cutting concerns: logging, exceptions, validation."""
