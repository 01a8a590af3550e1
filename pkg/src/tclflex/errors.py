"""Exception types shared across the library."""


class TclflexError(Exception):
    """Base class for every library-specific failure."""


class InvalidParameterError(TclflexError, ValueError):
    """A physical or model parameter violates its documented range."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvalidFleetError(TclflexError, ValueError):
    """A fleet as a whole cannot be used (empty, non-positive baselines, ...)."""


class SchemaError(TclflexError, ValueError):
    """An input file or dict does not match its documented schema."""


class InvalidProblemError(TclflexError, ValueError):
    """An LP's dimensions or bounds are inconsistent."""


class NumericalFailureError(TclflexError):
    """The solver hit its iteration cap or produced an inconsistent state.

    Raised instead of ever returning a wrong answer.
    """


class BudgetExceededError(TclflexError):
    """A combinatorial budget (vertex-enumeration horizon) was exceeded."""


class BaselineInfeasibleError(TclflexError):
    """The fleet baseline violates the network limits; no inner model exists."""


class DataIntegrityError(TclflexError):
    """Supplied data contradicts a structural assumption (e.g. monotonicity)."""


class InfeasibleDispatchError(TclflexError):
    """A dispatch window has no feasible solution."""

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"dispatch window starting at step {step} is infeasible")


class ModelCombinationError(TclflexError, ValueError):
    """Two battery models cannot be combined (alpha mismatch or non-nesting)."""
