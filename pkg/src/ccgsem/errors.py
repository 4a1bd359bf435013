"""Exception hierarchy shared by every module of the package."""


class CcgError(Exception):
    """Base class for all errors raised by ccgsem."""


class SyntaxErrorAt(CcgError):
    """Malformed term or category text.

    ``pos`` is the character offset of the offending token.
    """

    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class TermSyntaxError(SyntaxErrorAt):
    pass


class CategorySyntaxError(SyntaxErrorAt):
    pass


class LexiconError(CcgError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class FuelExhausted(CcgError):
    """Normalization did not terminate within its step budget.

    Derivation terms always terminate, so this points at a bad lexical LF.
    """


class RuleInapplicable(CcgError):
    """A semantic operation was handed a functor that is not an abstraction."""


class ArityMismatch(CcgError):
    """Coordination met a slash category whose LF is not an abstraction."""


class CoordinationDepthError(CcgError):
    """Coordination would descend deeper than the configured bound."""


class UnknownWordError(CcgError):
    def __init__(self, words):
        self.words = list(words)
        super().__init__("unknown word(s): " + ", ".join(self.words))
