"""Exception types shared across the toolkit."""


class HopfMismatchError(ValueError):
    """Two objects live over different Hopf algebras."""


class AxiomError(ValueError):
    """Structure constants failed an axiom check at construction time."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.name for c in report.failures())
        super().__init__(f"axiom check failed: {failed}")


class BoundExceededError(ValueError):
    """The brute-force enumeration would exceed the configured vector cap."""


class NotInvolutoryError(ValueError):
    """The construction requires the antipode to square to the identity."""


class RankNotInvertibleError(ValueError):
    """dim(N)*1_k is not a unit in the base field."""


class NotAMorphismError(ValueError):
    """A claimed map is not in the relevant Hom space."""


class NotInjectiveError(ValueError):
    """A claimed mono has a nontrivial kernel."""


class NotSplitError(ValueError):
    """No retraction exists in the relevant Hom space."""


class ParseError(ValueError):
    """A document failed to parse; the message names the offending field."""
