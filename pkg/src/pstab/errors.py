"""Exception types shared across the toolkit."""


class PstabError(Exception):
    """Base class for all toolkit errors."""


class BadParameters(PstabError):
    """Input parameters violate a documented precondition."""


class OrderCapExceeded(PstabError):
    """A computation would enumerate more elements than the configured cap.

    Signals a desk-scale limit, not wrong input.
    """


class DegreeCapExceeded(PstabError):
    """A permutation action would need more points than the configured cap."""


class NotNormal(BadParameters):
    """Quotient requested by a non-normal subgroup."""


class NotNormalized(BadParameters):
    """Element does not normalize the subgroup it is supposed to act on."""


class NotFullyNormalized(BadParameters):
    """Fusion-system operation requires a fully normalized subgroup."""


class NotCentric(BadParameters):
    """Fusion-system operation requires a centric subgroup."""


class NotNormalInF(BadParameters):
    """Quotient fusion system requested by a subgroup not normal in the system."""


class MismatchedSylow(BadParameters):
    """Fusion-system comparison across different Sylow subgroups without an identification."""
