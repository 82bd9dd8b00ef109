"""Exception hierarchy shared by every module."""


class BSDHError(ValueError):
    """Base class for domain precondition failures."""


class RankError(BSDHError):
    pass


class LetterError(BSDHError):
    pass


class NotReducedError(BSDHError):
    """Raised when a word is not a reduced expression.

    ``position`` is the 1-based index of a letter that can be cancelled:
    the root sent negative by the suffix starting there.
    """

    def __init__(self, word, position):
        self.word = tuple(word)
        self.position = position
        super().__init__(
            f"word {','.join(map(str, self.word)) or '(empty)'} is not reduced "
            f"(fails at position {position})"
        )


class NotMinusculeError(BSDHError):
    pass


class HypothesisError(BSDHError):
    """Input lies outside the hypotheses of a classification theorem."""


class InvariantViolation(RuntimeError):
    """Two independent computations disagreed; this indicates a bug."""
