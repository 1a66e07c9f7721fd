"""Domain errors shared across the package."""


class GroupOrderError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotInKernel(GroupOrderError):
    """A mixed word fed to the kernel rewriter does not map to 1 in G."""

    def __init__(self, residual_literal: str):
        self.residual_literal = residual_literal
        super().__init__(f"word is not in the kernel; residual image {residual_literal}")


class NotInFiber(GroupOrderError):
    """The defining equation of the fiber product fails for a pair (u, v)."""

    def __init__(self, pi1_literal: str, pi2_literal: str):
        self.pi1_literal = pi1_literal
        self.pi2_literal = pi2_literal
        super().__init__(
            f"pair is not in the fiber product: first projection gives {pi1_literal}, "
            f"second gives {pi2_literal}"
        )


class OracleMismatch(GroupOrderError):
    """Two values built over different group oracles were combined."""


class WordProblemUnavailable(GroupOrderError):
    """The requested group has no computable normal form here."""


class BudgetExhausted(GroupOrderError):
    """A bounded search ran out of nodes or time.

    Carries the progress made so far so callers can report it (CLI exit code 3).
    """

    def __init__(self, nodes: int, total_so_far: int, nontrivial_so_far: int):
        self.nodes = nodes
        self.total_so_far = total_so_far
        self.nontrivial_so_far = nontrivial_so_far
        super().__init__(
            f"search budget exhausted after {nodes} nodes "
            f"({total_so_far} homomorphisms found so far)"
        )
