"""Exception types shared across the package."""


class ThermalJcError(Exception):
    """Base class for every error raised by this package."""


class InvalidStateError(ThermalJcError, ValueError):
    """A state violates trace, hermiticity, or positivity bounds."""


class TruncationLimitError(ThermalJcError, RuntimeError):
    """A resolved photon-number cutoff exceeds the configured hard cap."""


class LeakageError(ThermalJcError, RuntimeError):
    """A truncated Fock basis captures too little thermal weight."""


class ConvergenceError(ThermalJcError, RuntimeError):
    """The variational search exhausted its budget while still improving."""


class ConsistencyError(ThermalJcError, RuntimeError):
    """Two routes that must agree (shortcut vs. full formula, or the
    reduced state vs. its expected sparsity pattern) diverged."""
