"""Exception types raised across the library."""


class RibbonPolyError(Exception):
    """Base class for all errors raised by this package."""


class NotInvolution(RibbonPolyError):
    """The edge pairing is not a fixed-point-free involution."""


class NotPartition(RibbonPolyError):
    """The vertex rotation cycles do not partition the half-edge labels."""


class Disconnected(RibbonPolyError):
    """An operation requiring a connected graph received a disconnected one."""


class SplitRoot(Disconnected):
    """Quasi-tree enumeration started from a disconnected graph."""


class LoopContraction(RibbonPolyError):
    """Attempted to contract a loop; the recursion never does this."""


class NotQuasiTree(RibbonPolyError):
    """The edge subset does not have a single boundary component."""


class NegativeExponent(RibbonPolyError):
    """Counting substitution hit a monomial with nullity < 2 * genus."""


class SizeLimit(RibbonPolyError):
    """The state sum was asked to expand more subgraphs than the cap allows."""


class Mismatch(RibbonPolyError):
    """Two evaluation methods disagreed on the polynomial.

    Carries the method names and the two canonical polynomial strings.
    """

    def __init__(self, method_a, poly_a, method_b, poly_b):
        self.method_a = method_a
        self.poly_a = poly_a
        self.method_b = method_b
        self.poly_b = poly_b
        super().__init__(
            f"{method_a} and {method_b} disagree:\n  {method_a}: {poly_a}\n  {method_b}: {poly_b}"
        )


class BijectionFailure(RibbonPolyError):
    """Quasi-trees of the dual are not the edge-complements of the originals."""


class IdentityFailure(RibbonPolyError):
    """The duality identity failed at an exact rational sample point."""
