"""Error types shared across the package.

Input/precondition problems and negative computational outcomes are kept
apart so the CLI can map them to distinct exit codes.
"""


class InputError(ValueError):
    """Malformed or precondition-violating input."""


class ZeroDirection(InputError):
    """A direction vector must be nonzero."""


class DegenerateBody(InputError):
    """Operation requires a body with at least two vertices."""


class BadProfile(InputError):
    """Column-multiplicity profile is not usable."""


class BadWindow(InputError):
    """Rendering window is empty."""


class SingularMatrix(InputError):
    """Matrix argument must be invertible."""


class ComputationRefused(Exception):
    """A well-formed input for which the requested certificate does not exist."""


class NotInPlueckerSpace(ComputationRefused):
    """Vector fails the Pluecker-type inequalities."""

    def __init__(self, violations):
        self.violations = violations
        super().__init__(f"{len(violations)} Pluecker-type inequality violation(s)")


class NoSeparation(ComputationRefused):
    """The candidate vector satisfies the bilinear relation, so no witness."""


class MinkowskiViolated(ComputationRefused):
    """v12^2 < v11*v22: no pair of bodies realizes the triple."""


class NonTransversal(ComputationRefused):
    """Two tropical curves do not intersect transversally."""

    def __init__(self, message, offending=None):
        self.offending = offending
        super().__init__(message)
