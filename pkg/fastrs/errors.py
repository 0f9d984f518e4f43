class FastRSError(Exception):
    """Base class for every error raised by the toolkit."""


class UnknownField(FastRSError):
    pass


class ZeroInversion(FastRSError):
    pass


class IndexOutOfRange(FastRSError):
    pass


class LengthMismatch(FastRSError):
    pass


class IndexViolation(FastRSError):
    pass


class MalformedInput(FastRSError):
    pass


class OddT0(MalformedInput):
    pass


class CountOutOfRange(FastRSError):
    pass


class DegenerateInput(FastRSError):
    pass


class ZeroDenominator(FastRSError):
    pass


class SolverInvariantError(FastRSError):
    pass


class CountMismatch(FastRSError):
    pass


class FormatError(FastRSError):
    pass


class Undecodable(FastRSError):
    def __init__(self, stage, message=''):
        self.stage = stage
        super().__init__(message or 'decoding failed at %s' % stage)


class InconsistentCount(Undecodable):
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__('chien', 'locator has %d roots, expected %d' % (found, expected))
