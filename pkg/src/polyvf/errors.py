"""Exception types shared across the package.

``DomainError`` marks failures of a mathematical precondition (a map that is
not etale, fields that do not commute, ...).  The CLI maps these to exit
code 1; syntax problems in user input raise ``ParseError`` and map to exit
code 2.
"""

from __future__ import annotations


class DomainError(Exception):
    """A mathematical precondition does not hold for the given input."""


class DimensionMismatch(DomainError):
    """Operands live in polynomial rings of different ambient dimension."""


class NotClosed(DomainError):
    """A tuple of polynomials is not a closed one-form.

    ``witness`` is a pair (i, j) of variable indices with unequal cross
    partials.
    """

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(
            f"not a closed form: partial_{witness[0]} of component {witness[1]} "
            f"differs from partial_{witness[1]} of component {witness[0]}"
        )


class NotEtale(DomainError):
    """The Jacobian determinant is not a nonzero constant."""


class FrameError(DomainError):
    """A list of vector fields fails a frame precondition."""


class NotCommuting(FrameError):
    """Two fields in a would-be frame have a nonzero bracket.

    ``witness`` is the offending index pair (i, j); ``bracket`` the nonzero
    bracket field.
    """

    def __init__(self, witness: tuple[int, int], bracket):
        self.witness = witness
        self.bracket = bracket
        super().__init__(
            f"fields {witness[0]} and {witness[1]} do not commute"
        )


class LinearlyDependent(FrameError):
    """The fields admit a nontrivial constant-coefficient relation.

    ``witness`` lists rational coefficients of a vanishing combination.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__("fields are linearly dependent over the constants")


class WrongFieldCount(FrameError):
    """A frame needs exactly as many fields as the ambient dimension."""


class NotConstantDivergence(DomainError):
    """The field's divergence is not a constant polynomial."""


class DarbouxUndecided(DomainError):
    """The Darboux decision procedure does not apply to this family.

    Raised for fewer than n fields with no module relation among them; the
    determinant route needs a square component matrix and the relation route
    needs a rank-deficient one.
    """


class ParseError(Exception):
    """Syntax error in textual input; ``position`` is a byte offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")
