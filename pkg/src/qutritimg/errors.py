"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Input has the wrong dimensions for the requested operation."""


class ParseError(ValueError):
    """Malformed file content."""


class UnsupportedDepthError(ParseError):
    """Image file uses a sample depth other than 8 bits."""


class CapacityError(ValueError):
    """Requested register exceeds the supported simulation size."""


class HistogramInconsistencyError(ValueError):
    """Histogram encodes contradictory digit assignments for one basis slot."""
