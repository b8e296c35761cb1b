"""Exception types shared across the toolkit."""


class LatkitError(Exception):
    """Base class for every error raised by latkit."""


class CycleError(LatkitError):
    """Cover pairs close a directed cycle, so no partial order exists."""


class CapError(LatkitError):
    """A configured capacity limit was exceeded."""


class ExplosionError(CapError):
    """Downset enumeration exceeded the configured cap.

    Raised instead of returning a partial list; carries the cap that fired.
    """

    def __init__(self, cap: int):
        super().__init__(f"downset count exceeds the cap of {cap}")
        self.cap = cap


class NotALatticeError(LatkitError):
    """The order is not a bounded lattice; `witness` is the offending pair."""

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotDistributiveError(LatkitError):
    """Operation requires a distributive lattice."""


class EmptyError(LatkitError):
    """Requested a maximal join-irreducible from a lattice that has none."""


class NotMaximalJIError(LatkitError):
    """Pruning element must be a maximal join-irreducible."""


class NotACoverError(LatkitError):
    """The given pair is not a cover of the lattice."""


class NotASublatticeError(LatkitError):
    """Embeddedness asked of a mask that is not join/meet closed."""


class EmptyClassError(LatkitError):
    """A join class came up empty; signals a broken lattice upstream."""

    def __init__(self, gamma: int):
        super().__init__(f"join class of element {gamma} is empty")
        self.gamma = gamma


class ParityError(LatkitError):
    """Noncomparable-pair formula produced an odd numerator."""


class ParseError(LatkitError):
    """Malformed input text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
