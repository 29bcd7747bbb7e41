"""Exception types shared across the package."""

from __future__ import annotations


class FusionError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(FusionError):
    """Rank outside the allowed range for the requested family."""


class AlgebraMismatch(FusionError):
    """Operands belong to different algebras or have the wrong length."""


class NotARoot(FusionError):
    """A weight was required to be a root of the algebra but is not."""


class LevelTooSmall(FusionError):
    """The level is below the domain floor of the requested quantity."""


class LevelMismatch(FusionError):
    """Affine weights at different levels were combined."""


class NoClosedForm(FusionError):
    """No closed-form tadpole polynomial exists for this algebra."""
