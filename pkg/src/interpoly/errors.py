"""Exception types shared across the package."""


class MixedFieldsError(TypeError):
    """Two values from different fields were combined."""


class DimensionMismatchError(ValueError):
    """Shapes of the operands are incompatible."""


class DuplicateNodeError(ValueError):
    """Two interpolation nodes share the same x-coordinate."""


class FieldTooSmallError(ValueError):
    """The prime field has fewer elements than the codeword needs distinct nodes."""


class InsufficientRedundancyError(ValueError):
    """The requested check needs at least one redundant value in the codeword."""


class DetectedError(Exception):
    """A transmission error was detected and could not be corrected."""


class AmbiguousDecodeError(Exception):
    """More than one plausible correction exists; the decoder refuses to guess."""


class InvalidGenusError(ValueError):
    """Genus outside the admissible range for plane curves of the given degree."""
