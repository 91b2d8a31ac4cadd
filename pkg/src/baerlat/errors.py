"""Exception hierarchy.

Every structural failure carries a ``witness``: the tuple of element
indices (or the pair/triple) that demonstrates the violation, so a caller
can replay it.
"""


class StructureError(ValueError):
    """Base class for invalid lattice / multiplication input."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


# order level
class NotAPartialOrder(StructureError):
    def __init__(self, axiom, witness):
        super().__init__(f"relation is not {axiom}: witness {tuple(witness)}", witness)
        self.axiom = axiom


class NotALattice(StructureError):
    pass


class NoBounds(StructureError):
    pass


# multiplication level
class NotCommutative(StructureError):
    pass


class NotAssociative(StructureError):
    pass


class IdentityFails(StructureError):
    pass


class NotJoinDistributive(StructureError):
    pass


class BottomNotAbsorbing(StructureError):
    pass


# derived structures
class NotBoolean(StructureError):
    pass


class RadicalMismatch(StructureError):
    pass


class FrameLawViolation(StructureError):
    pass


class NotDistributive(StructureError):
    pass


class PreconditionViolated(ValueError):
    pass


class UnknownFixture(KeyError):
    pass


class UnknownPredicate(KeyError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """A syntactically valid MLAT file whose content fails validation.

    The underlying :class:`StructureError` is chained as ``__cause__`` and
    also kept in ``cause``.
    """

    def __init__(self, cause):
        super().__init__(f"{type(cause).__name__}: {cause}")
        self.cause = cause
