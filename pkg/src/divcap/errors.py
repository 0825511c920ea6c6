"""Exception types shared across the package."""


class ContextError(ValueError):
    """Operands live in different variable contexts."""


class UnsupportedSetting(ValueError):
    """Input falls outside every exactly computable setting (monomial, plane, pid)."""


class IrrationalPoints(UnsupportedSetting):
    """Two plane curves meet in a point that is not defined over the rationals."""


class PreconditionError(ValueError):
    """An operation was called on inputs violating its hypotheses."""


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self._render())

    def _render(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} at position {self.position}\n  {self.text}\n  {' ' * self.position}^"


class VerificationFailure(AssertionError):
    """An identity that must hold exactly was found to fail."""
