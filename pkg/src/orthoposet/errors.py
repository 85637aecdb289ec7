"""Exception types shared across the library."""


class OrthoposetError(Exception):
    """Base class for every error raised by this library."""


class DuplicateLabelError(OrthoposetError):
    """An element label occurs more than once."""


class UnknownLabelError(OrthoposetError):
    """A label does not name an element of the poset."""


class CycleDetectedError(OrthoposetError):
    """The asserted relation pairs close into a cycle (antisymmetry fails)."""


class NoBottomError(OrthoposetError):
    """The operation needs a least element, but there is none."""


class NotBoundedError(OrthoposetError):
    """The operation needs both a least and a greatest element."""


class SizeLimitError(OrthoposetError):
    """A carrier or search exceeds its configured size cap."""


class SkeletonTooLargeError(OrthoposetError):
    """The pseudocomplement image is too large for an exhaustive subset scan."""


class NotALatticeError(OrthoposetError):
    """The operation needs total meet and join tables."""


class NotAtomicError(OrthoposetError):
    """The operation needs every nonzero element to dominate an atom."""


class NotMeetSemilatticeError(OrthoposetError):
    """The operation needs all pairwise meets to exist."""


class UnknownFixtureError(OrthoposetError):
    """No built-in poset goes by that name."""


class PosetSyntaxError(OrthoposetError):
    """Malformed poset text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
