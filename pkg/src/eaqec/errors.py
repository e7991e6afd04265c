"""Exception types shared by the package.

The CLI maps these onto exit codes: input problems exit 2, capability
limits exit 3, broken internal invariants exit 4.
"""


class EaqecError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(EaqecError, ValueError):
    """Operands act on different numbers of qubits."""


class RankError(EaqecError, ValueError):
    """A generator list that must be independent is not."""


class StructureError(EaqecError, ValueError):
    """Generators violate a required commutation or pairing structure."""


class ParseError(EaqecError, ValueError):
    """Malformed code file or Pauli string."""


class CapabilityError(EaqecError):
    """The request exceeds a documented size or parameter limit."""


class InvariantError(EaqecError):
    """An internal consistency check failed."""
