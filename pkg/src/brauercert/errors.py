"""Exception types shared by all brauercert modules."""


class BrauerCertError(Exception):
    """Base class for every error raised by this package."""


class InvalidPrime(BrauerCertError):
    pass


class ZeroElement(BrauerCertError):
    pass


class NoRootsOfUnity(BrauerCertError):
    """d-th roots of unity are not available in the field at hand."""


class Undefined(BrauerCertError):
    pass


class BudgetExceeded(BrauerCertError):
    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class NotProper(BrauerCertError):
    """Two curves share a component; their intersection is not finite."""


class NotOnCurve(BrauerCertError):
    pass


class SingularPoint(BrauerCertError):
    pass


class NotPrincipal(BrauerCertError):
    pass


class DegreeNonzero(BrauerCertError):
    pass


class BadRoot(BrauerCertError):
    """A claimed primitive root of unity does not have the right order."""


class Indeterminate(BrauerCertError):
    """A function vanishes identically where a residue was requested."""


class NotReduced(BrauerCertError):
    """Artin-Schreier data with pole order divisible by p; reduction unsupported."""


class TameOnly(BrauerCertError):
    """Operation only valid for torsion prime to the residue characteristic."""


class Unsupported(BrauerCertError):
    pass


class BadElement(BrauerCertError):
    pass


class IntegralityViolation(BrauerCertError):
    """An exact division left the coefficient ring; indicates bad input or a bug."""


class SetupViolation(BrauerCertError):
    """A pipeline hypothesis failed; carries the offending check and a witness."""

    def __init__(self, check, witness=None):
        super().__init__(f"setup violation at check {check!r}")
        self.check = check
        self.witness = witness


class NoPrimitiveRoot(BrauerCertError):
    pass


class TangentThroughP0(BrauerCertError):
    pass


class SearchExhausted(BrauerCertError):
    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = table
