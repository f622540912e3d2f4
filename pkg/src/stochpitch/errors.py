"""Exception types shared across the toolkit."""


class StochPitchError(Exception):
    """Base class for toolkit-specific failures."""


class NegativeDensityError(StochPitchError, RuntimeError):
    """A time step produced negative density beyond the clamp tolerance.

    Signals an unstable configuration (time step too large for the grid /
    drift magnitude at the occupied region), not a recoverable state.
    """


class LinearSolveError(StochPitchError, RuntimeError):
    """The implicit Crank-Nicolson system could not be solved."""


class UnsettledOrbitError(StochPitchError, RuntimeError):
    """One or more most probable orbits failed to settle within the
    maximally extended horizon."""

    def __init__(self, initial_conditions, message=None):
        self.initial_conditions = list(initial_conditions)
        if message is None:
            message = (
                "orbits unresolved after horizon extension for x0 = "
                + ", ".join(f"{x0:g}" for x0 in self.initial_conditions)
            )
        super().__init__(message)


class BoundaryRidgeError(StochPitchError, RuntimeError):
    """The density maximum sits persistently at the domain boundary;
    the state window is too small for the requested dynamics."""


class ConfigError(StochPitchError, ValueError):
    """Invalid run configuration; collects every violation, not just the
    first one."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
