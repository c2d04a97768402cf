"""Exception types raised across the package."""


class AffilcommError(Exception):
    """Base class for all errors raised by affilcomm."""


class SelfLoopError(AffilcommError):
    pass


class UnknownVertexError(AffilcommError):
    pass


class ZeroWeightError(AffilcommError):
    pass


class UnknownAttributeError(AffilcommError):
    pass


class KindMismatchError(AffilcommError):
    pass


class DuplicateCatalogLabelError(AffilcommError):
    pass


class EmptyInputError(AffilcommError):
    pass


class EmptyGraphError(AffilcommError):
    pass


class IncompletePartitionError(AffilcommError):
    pass


class UnknownCommunityError(AffilcommError):
    pass


class SameCommunityError(AffilcommError):
    pass


class TooLargeError(AffilcommError):
    pass


class BadConfigError(AffilcommError):
    pass


class ParseError(AffilcommError):
    pass


class MissingAttributeError(AffilcommError):
    pass


class EmptyPartitionError(AffilcommError):
    pass
