"""Exception types raised across the package."""

from __future__ import annotations


class MaxArcsError(Exception):
    pass


class CapExceeded(MaxArcsError):
    """Requested enumeration of 2^k words with k above the configured cap."""

    def __init__(self, k: int, cap: int):
        super().__init__(f"dimension {k} exceeds enumeration cap {cap}")
        self.k = k
        self.cap = cap


class ParseError(MaxArcsError):
    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class AxiomViolation(MaxArcsError):
    """A plane axiom fails; ``detail`` names the offending points or lines."""

    def __init__(self, message: str, detail: tuple = ()):
        super().__init__(message)
        self.detail = detail


class NotMaximal(MaxArcsError):
    def __init__(self, line_id: int | None, intersection_size: int, message: str = ""):
        if not message:
            if line_id is None:
                message = f"wrong arc size {intersection_size}"
            else:
                message = f"line {line_id} meets the set in {intersection_size} points"
        super().__init__(message)
        self.line_id = line_id
        self.intersection_size = intersection_size


class NotPairwiseCompatible(MaxArcsError):
    def __init__(self, i: int, j: int):
        super().__init__(f"resolutions {i} and {j} are not compatible")
        self.i = i
        self.j = j


class ZeroCode(MaxArcsError):
    pass


class InconsistentParameters(MaxArcsError):
    pass


class DecodingFailure(MaxArcsError):
    def __init__(self, message: str, word=None):
        super().__init__(message)
        self.word = word


class TheoremViolation(MaxArcsError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
