"""Exception hierarchy shared by every module of the package."""


class DiracPairingsError(Exception):
    """Base class for all errors raised by dirac_pairings."""


class _InputError(DiracPairingsError, ValueError):
    """Input failed validation."""


# Root data and weights
class InvalidRootSystem(_InputError):
    """Roots are not closed under reflections or flags are inconsistent."""


class OddNoncompactDimension(_InputError):
    """The number of noncompact roots (dim p) is odd."""


class NonDefiniteForm(_InputError):
    """The Gram matrix is not symmetric positive definite."""


class NonDominantWeight(_InputError):
    """A highest weight is not dominant integral for the relevant positive system."""


class NotInvariant(_InputError):
    """A Laurent element is not invariant under the compact Weyl group."""


class CoverMismatch(_InputError):
    """Characters living on K and on its spin double cover were combined."""


class LatticeMismatch(_InputError):
    """Character numerators on different lattices or root data were paired."""


# Parameters and providers
class InvalidParameter(_InputError):
    """A Harish-Chandra parameter violates its positivity conditions."""


class SingularOnCompactWall(InvalidParameter):
    """A parameter is orthogonal to a compact root."""


class UnboundedProvider(_InputError):
    """A K-type provider did not declare a finite support radius."""


# Exact linear algebra and Fredholm pairs
class ShapeMismatch(_InputError):
    """Matrix shapes do not compose as required."""


class NotAComplex(DiracPairingsError):
    """Consecutive differentials do not compose to zero."""


class DiagramNotCommutative(DiracPairingsError):
    """A square of the additivity diagram does not commute."""


class SequenceNotExact(DiracPairingsError):
    """A column of the additivity diagram is not a short exact sequence."""


class HypothesisSTnotZero(DiracPairingsError):
    """A pair of the additivity diagram has ST != 0 or TS != 0."""


class SemisimplicityFails(DiracPairingsError):
    """ker F^2 and Im F^2 do not span the whole super space."""


# Identities
class IdentityFailed(DiracPairingsError):
    """An identity that must hold exactly did not."""

    def __init__(self, message: str, detail: str | None = None):
        super().__init__(message if detail is None else f"{message}: {detail}")
        self.detail = detail


class CliffordRelationFailed(IdentityFailed):
    """Spinor matrices do not satisfy the Clifford relation."""


# Command line
class UsageError(DiracPairingsError):
    """The command line could not be interpreted."""


class DatumLoadError(DiracPairingsError):
    """A root datum or module file could not be read."""
