"""Exception hierarchy shared by all coordlat modules."""


class CoordlatError(Exception):
    """Base class for all library errors."""


class SizeLimitError(CoordlatError):
    """A requested structure or search exceeds the configured size cap."""


class UsageError(CoordlatError):
    """Operands do not fit together (mismatched modules, endpoints, ...)."""


class AlgebraError(CoordlatError):
    """An algebraic axiom is violated; carries the witnessing tuple."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} violated at {witness}")


class LatticeStructureError(CoordlatError):
    """A family of sets is not a lattice under inclusion."""


class ConsistencyError(CoordlatError):
    """Two routes that must agree produced different answers (internal bug)."""


class PreconditionError(CoordlatError):
    """An operation was invoked on input that fails its precondition."""


class ParseError(CoordlatError):
    """Malformed document or constructor expression."""


class SchemaError(CoordlatError):
    """A document is syntactically valid JSON but violates the schema."""
