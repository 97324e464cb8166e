"""Typed domain errors.

Every rule violation raises a subclass of DomainError so callers (and the
CLI) can distinguish domain failures from programming bugs.  Parse errors
of the two text grammars are separate because the CLI maps them to a
different exit code.
"""


class DomainError(Exception):
    """Base class for all domain-rule violations."""


class ParseError(ValueError):
    """Malformed textual input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class OrdinalSyntaxError(ParseError):
    pass


class ClopenSyntaxError(ParseError):
    pass


# ordinal arithmetic
class Underflow(DomainError):
    """sub(a, b) needs a <= b."""


class NotALimit(DomainError):
    """Fundamental sequences exist only for limit ordinals."""


# clopen sets
class AmbientMismatch(DomainError):
    pass


class PointOutsideAmbient(DomainError):
    pass


class NoPointOfRank(DomainError):
    pass


class EmptyInput(DomainError):
    pass


# partitions
class RankZeroSpace(DomainError):
    """Rank-0 spaces are finite discrete; there is no shift geometry."""


class NotSuccessorRank(DomainError):
    pass


class PayloadNotInPart(DomainError):
    pass


class PayloadContainsMaximalPoint(DomainError):
    pass


class PayloadWrongCharPair(DomainError):
    pass


class WindowTouchesMaximalPoint(DomainError):
    pass


# shift graph
class RankNotOne(DomainError):
    pass


class WindowTooSmall(DomainError):
    pass


# self-similar graph
class ConfigMismatch(DomainError):
    pass


class NotAdjacent(DomainError):
    pass


# homeomorphisms
class NotHomeomorphic(DomainError):
    pass


class EmptySets(DomainError):
    pass


class PointNotInDomain(DomainError):
    pass


class PieceMismatch(DomainError):
    pass


class NotAPartition(DomainError):
    pass


# height function
class ImageNotGoodPartition(DomainError):
    pass


class NotLimitRank(DomainError):
    pass


class RankTooHigh(DomainError):
    pass
