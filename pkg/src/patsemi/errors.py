"""Exception hierarchy.

Three branches under the package root error: bad input (parse errors,
impossible constructions), violated mathematical preconditions (caller asked
for something the theory does not define), and exhausted resource budgets
(search or enumeration ceilings). CLI exit codes map onto the branches.
"""


class PatsemiError(Exception):
    """Root of all package-specific errors."""


class InputError(PatsemiError):
    """Malformed or mathematically impossible input."""


class ParseError(InputError):
    """Text form of a semigroup or pattern could not be parsed."""


class NotCofinite(InputError):
    """Generators with gcd > 1 never generate a cofinite submonoid."""


class PreconditionError(PatsemiError):
    """Operation precondition violated; the result would be undefined."""


class PreconditionViolated(PreconditionError):
    """Generic precondition failure with a message naming the condition."""


class NotMember(PreconditionError):
    """Element expected to lie in the semigroup does not."""


class NotMinimalGenerator(PreconditionError):
    """Element expected to be a minimal generator is not one."""


class IsFullSet(PreconditionError):
    """Operation undefined for the full set of nonnegative integers."""


class NotAdmissible(PreconditionError):
    """Pattern is not admissible, so the requested notion is undefined."""


class NegativeLead(PreconditionError):
    """Derived pattern requires a positive leading coefficient."""


class GcdIsOne(PreconditionError):
    """Construction needs gcd(multiplicity, constant) > 1."""


class ElementBelowMultiplicity(PreconditionError):
    """Nonzero element smaller than the multiplicity was supplied."""


class ResourceLimit(PatsemiError):
    """A configured search or enumeration budget was exhausted."""


class ConductorLimitExceeded(ResourceLimit):
    """Semigroup construction would exceed the conductor cap."""


class SearchTooLarge(ResourceLimit):
    """Decision-procedure search space exceeds the ceiling."""


class NodeCeilingExceeded(ResourceLimit):
    """Tree enumeration produced more nodes than allowed."""
