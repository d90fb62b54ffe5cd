"""Exception types shared across the toolkit."""


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at offset {position}: {message}")
        self.position = position


class InternalCheckError(RuntimeError):
    """A cross-check that can only fail through an implementation bug failed."""


class ThresholdNotObserved(RuntimeError):
    """A vanishing-threshold search exhausted its cap without observing vanishing.

    This reports a bounded search coming up empty; it never asserts that the
    quantity fails to vanish beyond the cap.
    """
