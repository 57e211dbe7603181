"""Exception types shared across the package."""


class PolaronixError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(PolaronixError):
    """Invalid physical or numerical parameters."""


class QuadratureError(PolaronixError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class GridError(PolaronixError):
    """A value is off the shared uniform grid, or two grids disagree."""


class LengthError(PolaronixError):
    """Series passed together have mismatched lengths."""
