class ZeroTerm(ArithmeticError):
    """A sequence term needed as a divisor is zero."""

    def __init__(self, index: int) -> None:
        super().__init__(f"zero term at sequence index {index}")
        self.index = index


class NotConverged(ArithmeticError):
    """Remainder decay could not be certified within the step budget."""

    def __init__(self, message: str, result=None) -> None:
        super().__init__(message)
        self.result = result
