"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed or structurally invalid graph input (parse errors, self-loops,
    duplicate edges, disconnected input)."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration hit its configured cap instead of truncating.

    ``cap`` is ``"pair"`` (per source/target pair) or ``"total"`` (global).
    """

    def __init__(self, cap: str, limit: int):
        self.cap = cap
        self.limit = limit
        super().__init__(f"enumeration exceeded {cap} budget of {limit}")


class ClassMismatchError(ValueError):
    """A graph-class assumption required by a solver does not hold; carries a
    structural witness when one is available."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)
