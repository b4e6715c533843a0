"""Domain errors.

Every error carries a ``kind`` string and optional structured details so the
CLI can emit it as a JSON object and tests can assert on kinds exactly.
"""


class DomainError(Exception):
    kind = "DomainError"

    def __init__(self, message="", **details):
        super().__init__(message or self.kind)
        self.message = message
        self.details = details

    def to_json(self):
        out = {"kind": self.kind}
        if self.message:
            out["message"] = self.message
        out.update(self.details)
        return out


class ParseError(DomainError):
    kind = "ParseError"


class DivisionByZero(DomainError):
    kind = "DivisionByZero"


class NonPolynomial(DomainError):
    kind = "NonPolynomial"


class InvalidScheme(DomainError):
    kind = "InvalidScheme"


class NotClassifiable(DomainError):
    kind = "NotClassifiable"


class Unsupported(DomainError):
    kind = "Unsupported"


class NonInvertible(DomainError):
    kind = "NonInvertible"


class NotNilpotentKernel(DomainError):
    kind = "NotNilpotentKernel"


class ZeroLeadingCoordinate(DomainError):
    kind = "ZeroLeadingCoordinate"


class DepthExceeded(DomainError):
    kind = "DepthExceeded"


class UnsupportedImageShape(DomainError):
    kind = "UnsupportedImageShape"


class NotOnVariety(DomainError):
    kind = "NotOnVariety"


class NotSubschemeOfProlongation(DomainError):
    kind = "NotSubschemeOfProlongation"


class BudgetExceeded(DomainError):
    kind = "BudgetExceeded"
