"""Exception types shared across the toolkit.

The distinction matters for callers: DomainError means the *call* was bad,
HypothesisError means the *instance* failed a stated precondition (and says
which one), ViolationError means a guaranteed conclusion could not be
realized -- the latter is a reportable outcome, never swallowed.
"""


class Tk5kitError(Exception):
    """Base class for all toolkit errors."""


class DomainError(Tk5kitError):
    """Malformed input: bad ids, bad sizes, bad structure."""


class ParseError(Tk5kitError):
    """Input text could not be decoded.  Carries a byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


class HypothesisError(Tk5kitError):
    """A named hypothesis of a verifier/lemma does not hold for the instance."""

    def __init__(self, name: str, detail: str = "", witness=None):
        super().__init__(f"hypothesis '{name}' failed" + (f": {detail}" if detail else ""))
        self.name = name
        self.detail = detail
        self.witness = witness


class ViolationError(Tk5kitError):
    """All guaranteed conclusions failed on an instance satisfying the
    hypotheses.  This is a distinguished, reportable outcome: it means the
    implemented statement is empirically false on this input (or the search
    below it is incomplete, which the test suite treats as a bug)."""

    def __init__(self, statement: str, detail: str = ""):
        super().__init__(f"violation of '{statement}'" + (f": {detail}" if detail else ""))
        self.statement = statement
        self.detail = detail


class BudgetExhausted(Tk5kitError):
    """A bounded search ran out of steps before reaching a verdict.

    Deliberately distinct from a 'none' answer: exhaustion carries no
    information about existence.
    """

    def __init__(self, steps: int):
        super().__init__(f"search budget exhausted after {steps} steps")
        self.steps = steps
