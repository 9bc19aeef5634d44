"""Exception types raised across the package."""


class LatstackError(Exception):
    pass


class RangeError(LatstackError, ValueError):
    pass


class CycleError(LatstackError, ValueError):
    pass


class NoExtremumError(LatstackError):
    pass


class NotLatticeError(LatstackError):
    pass


class NotMonotoneError(LatstackError):
    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class CompositionError(LatstackError):
    pass


class SeriesAxiomError(LatstackError):
    pass


class NotInImageError(LatstackError):
    pass


class SizeError(LatstackError):
    pass


class CapExceededError(LatstackError):
    def __init__(self, count, cap):
        super().__init__(f"{count} maximal chains exceed cap {cap}")
        self.count = count
        self.cap = cap


class NotMaximalError(LatstackError):
    pass


class InvalidWordError(LatstackError, ValueError):
    def __init__(self, msg, prefix=None):
        super().__init__(msg)
        self.prefix = prefix


class InvalidPartitionError(LatstackError, ValueError):
    pass


class InvalidWalkError(LatstackError, ValueError):
    pass


class ChoiceOutOfRangeError(LatstackError, ValueError):
    pass


class ParseError(LatstackError, ValueError):
    def __init__(self, msg, field=None):
        super().__init__(msg if field is None else f"{field}: {msg}")
        self.field = field
