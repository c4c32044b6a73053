"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or surgery input."""


class CapabilityError(ValueError):
    """Requested size exceeds an exact-computation cap."""


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ConvergenceError(RuntimeError):
    """Eigensolver failed to converge; carries iteration diagnostics."""

    def __init__(self, message, sweeps, off_norm):
        super().__init__(f"{message} (sweeps={sweeps}, off-diagonal norm={off_norm:.3e})")
        self.sweeps = sweeps
        self.off_norm = off_norm
