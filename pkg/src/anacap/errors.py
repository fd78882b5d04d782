"""Exception hierarchy for the anacap package."""


class AnacapError(Exception):
    """Base class for all anacap errors."""


class SceneConfigError(AnacapError):
    """Malformed scene/schedule configuration (bad JSON, unknown fields, bad types)."""


class OverlapError(AnacapError):
    """Two shape closures intersect (or one contains another)."""


class DegenerateShapeError(AnacapError):
    """Shape fails its own invariants (zero radius, collapsed or self-intersecting curve)."""


class ZeroScaleError(AnacapError):
    """Affine map z -> a*z + b requested with a = 0."""


class PoleEvaluationError(AnacapError):
    """Basis function evaluated at one of its pole points."""


class BranchCutError(AnacapError):
    """Fractional-power basis function evaluated on its branch cut."""


class NonRationalBasisError(AnacapError):
    """Residue-path integral requested for a non-rational basis function."""


class PoleOnContourError(AnacapError):
    """A pole of the integrand lies (numerically) on the integration circle."""


class MaxDepthError(AnacapError):
    """Adaptive quadrature failed to meet its tolerance at maximum recursion depth."""


class SingularGramError(AnacapError):
    """Gram matrix factorization failed; the basis is numerically dependent."""


class SolveError(AnacapError):
    """A linear solve produced an inconsistent or invalid result."""


class DuplicateCenterError(AnacapError):
    """Disk configuration has coincident centers."""


class SplitError(AnacapError):
    """Invalid split index m for a disk configuration."""


class PreconditionError(AnacapError):
    """Separation precondition of a discrete-capacity estimate is violated."""


class DomainError(AnacapError):
    """Scalar argument outside the domain of a closed-form formula."""
