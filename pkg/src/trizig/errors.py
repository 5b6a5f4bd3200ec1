"""Exception types shared across the package."""


class TrizigError(Exception):
    """Base class for every error raised by this library."""


class ValidationFailure(TrizigError):
    """A face list does not define a valid triangulation.

    Carries the full ``ValidationReport`` in ``self.report``.
    """

    def __init__(self, report):
        self.report = report
        detail = "; ".join(v.message for v in report.violations)
        super().__init__(f"invalid triangulation: {detail}")


class EdgeNotInFace(TrizigError):
    """The given edge is not an edge of the given face."""


class FaceNotFound(TrizigError):
    """The given face does not belong to the triangulation."""


class InvalidPosition(TrizigError):
    """A (dart, face) pair that is not a walk state of the triangulation."""


class NotZKnotted(TrizigError):
    """The operation requires a triangulation with a single zigzag pair."""


class UnclassifiableMonodromy(TrizigError):
    """A dart permutation matched none of the seven monodromy shapes.

    This never happens for monodromies computed from a valid triangulation;
    it signals an implementation bug or a hand-built invalid input.
    """


class InvalidSpecialMap(TrizigError):
    """A vertex map that is not a bijection between the two face boundaries."""


class InvalidMonodromyType(TrizigError):
    """A monodromy type tag outside the range accepted by the operation."""


class MonodromyNotIdentity(TrizigError):
    """The refinement move requires a face with identity z-monodromy."""


class NoValidMap(TrizigError):
    """No special map satisfied the gluing condition.

    For patches produced by ``patch_for`` a valid map always exists, so this
    error indicates a bug; it is raised loudly rather than handled.
    """


class ParameterOutOfRange(TrizigError):
    """A generator parameter outside its documented bounds."""


class SelfSum(TrizigError):
    """Connected sums of a triangulation with itself are not supported."""


class LabelCollision(TrizigError):
    """A relabeling would merge vertices of the two summands."""


class MalformedDocument(TrizigError):
    """Text that is not a well-formed tri-json/1 document."""
