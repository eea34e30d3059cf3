"""
Data models for the band-pass spectral translation.

TranslationParams holds the hyperparameters of one translation
(lower and upper band fractions, gamma, mode); FusionMask holds the
per-bin fusion weights built from them; TranslationResult is what a
translation hands back.
"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from .image_entity import RasterImage
from .spectrum_entity import ImageSpectrum
from ...shared.exceptions import ArgumentError
from ...shared.validation import (
    CustomRule,
    EnumRule,
    RangeRule,
    ValidationResult,
    ValidatorInterface,
    is_finite_number
)

DEFAULT_LAMBDA_L = 0.01
DEFAULT_LAMBDA_U = 0.10
DEFAULT_GAMMA = 3.5
EXTREME_GAMMA = 6.0
ABLATION_GAMMA = 2.5


class TranslationMode(Enum):
    """How the low-light amplitude is fused into the well-lit one."""
    OURS = "ours"
    FDA = "fda"
    ABLATION_RECT = "ablation_rect"
    ABLATION_LOWPASS = "ablation_lowpass"

    @classmethod
    def parse(cls, value: "str | TranslationMode") -> "TranslationMode":
        """
        Parse a mode name, accepting the short CLI aliases.

        Args:
            value: Mode, mode value, or one of ``rect`` / ``lowpass``

        Returns:
            TranslationMode: Parsed mode

        Raises:
            ArgumentError: If the name is unknown
        """
        if isinstance(value, cls):
            return value
        name = str(value).strip().lower()
        name = _MODE_ALIASES.get(name, name)
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(sorted({m.value for m in cls} | set(_MODE_ALIASES)))
            raise ArgumentError(f"Unknown mode '{value}' (choose from {choices})") from None

    @property
    def short_name(self) -> str:
        """Name used in output file names and on the command line."""
        return _MODE_SHORT_NAMES[self]


_MODE_ALIASES = {"rect": "ablation_rect", "lowpass": "ablation_lowpass"}
_MODE_SHORT_NAMES = {
    TranslationMode.OURS: "ours",
    TranslationMode.FDA: "fda",
    TranslationMode.ABLATION_RECT: "rect",
    TranslationMode.ABLATION_LOWPASS: "lowpass",
}


@dataclass(frozen=True)
class TranslationParams:
    """
    Hyperparameters of one translation.

    Invariants (checked by ``validate``): 0 <= lambda_l < lambda_u < 1
    and gamma >= 1. The defaults are the recommended setting.
    """
    lambda_l: float = DEFAULT_LAMBDA_L
    lambda_u: float = DEFAULT_LAMBDA_U
    gamma: float = DEFAULT_GAMMA
    mode: TranslationMode = TranslationMode.OURS

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", TranslationMode.parse(self.mode))

    @property
    def effective_lambda_l(self) -> float:
        """Lower band fraction actually used; the low-pass variants have none."""
        if self.mode in (TranslationMode.FDA, TranslationMode.ABLATION_LOWPASS):
            return 0.0
        return self.lambda_l

    def validate(self) -> ValidationResult["TranslationParams"]:
        """
        Validate the parameters.

        Returns:
            ValidationResult: Validation status and every issue found
        """
        return TranslationParamsValidator().validate(self)

    def ensure_valid(self) -> "TranslationParams":
        """
        Raise unless the parameters are valid.

        Returns:
            TranslationParams: self, for chaining

        Raises:
            ArgumentError: Listing every violated constraint
        """
        result = self.validate()
        if not result.is_valid:
            raise ArgumentError("; ".join(result.errors))
        return self

    def replace(self, **changes: Any) -> "TranslationParams":
        """Return a copy with the given fields changed."""
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """Convert params to dictionary representation."""
        return {
            'lambda_l': self.lambda_l,
            'lambda_u': self.lambda_u,
            'gamma': self.gamma,
            'mode': self.mode.value
        }


class TranslationParamsValidator(ValidatorInterface[TranslationParams]):
    """Per-field and cross-field checks for TranslationParams."""

    FIELDS = ("lambda_l", "lambda_u", "gamma", "mode")

    def __init__(self) -> None:
        super().__init__()
        self.add_rule("lambda_l", RangeRule("lambda_l must satisfy 0 <= lambda_l < 1",
                                            min_value=0.0, max_value=1.0, exclusive_max=True))
        self.add_rule("lambda_u", RangeRule("lambda_u must satisfy 0 < lambda_u < 1",
                                            min_value=0.0, max_value=1.0, exclusive_max=True))
        self.add_rule("lambda_u", CustomRule("lambda_l < lambda_u is required",
                                             self._band_is_ordered))
        self.add_rule("gamma", RangeRule("gamma must be a finite number >= 1", min_value=1.0))
        self.add_rule("mode", EnumRule("mode is not a known translation mode", TranslationMode))

    @staticmethod
    def _band_is_ordered(value: Any, context: Optional[Dict[str, Any]]) -> bool:
        lower = (context or {}).get("lambda_l")
        return is_finite_number(value) and is_finite_number(lower) and lower < value

    def field_context(self, data: TranslationParams) -> Dict[str, Any]:
        return {"lambda_l": data.lambda_l, "lambda_u": data.lambda_u}

    def validate(self, data: TranslationParams) -> ValidationResult[TranslationParams]:
        result: ValidationResult[TranslationParams] = ValidationResult(data=data)
        for name in self.FIELDS:
            result = result.merge(self.validate_field(name, getattr(data, name), data))
        return result


@dataclass(frozen=True)
class FusionMask:
    """
    Per-bin fusion weights on the centered frequency grid.

    Attributes:
        alpha: (H, W) weights in [0, 1]; read-only
        params: Parameters the mask was built from
        degenerate_band: True when no bin receives a positive weight,
            which reduces the translation to pure gamma darkening
    """
    alpha: np.ndarray
    params: TranslationParams
    degenerate_band: bool = False

    @property
    def height(self) -> int:
        return self.alpha.shape[0]

    @property
    def width(self) -> int:
        return self.alpha.shape[1]

    @property
    def support_size(self) -> int:
        """Number of bins with a positive weight."""
        return int(np.count_nonzero(self.alpha > 0))

    def to_dict(self) -> Dict[str, Any]:
        """Summary representation (not the weights themselves)."""
        return {
            'height': self.height,
            'width': self.width,
            'params': self.params.to_dict(),
            'degenerate_band': self.degenerate_band,
            'support_size': self.support_size
        }


@dataclass(frozen=True)
class TranslationResult:
    """
    Output of one translation.

    Attributes:
        image: The proxy low-light image
        mask: Mask used for fusion
        imaginary_residual: Largest imaginary magnitude discarded on inversion
        warnings: Human-readable notes (degenerate band)
        spectrum: Fused amplitude with the well-lit phase, before inversion
    """
    image: RasterImage
    mask: FusionMask
    imaginary_residual: float = 0.0
    warnings: List[str] = field(default_factory=list)
    spectrum: Optional[ImageSpectrum] = None

    @property
    def degenerate_band(self) -> bool:
        return self.mask.degenerate_band

    def to_dict(self) -> Dict[str, Any]:
        """Convert result to dictionary representation."""
        return {
            'image': self.image.to_dict(),
            'mask': self.mask.to_dict(),
            'imaginary_residual': self.imaginary_residual,
            'warnings': list(self.warnings)
        }
