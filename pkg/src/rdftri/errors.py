"""Exception hierarchy shared by all modules."""


class TriangulationError(Exception):
    """Base class for every error raised by rdftri."""


class DegenerateSimplex(TriangulationError):
    pass


class UnsupportedShape(TriangulationError):
    pass


class NotPure(TriangulationError):
    pass


class RidgeSharedByThree(TriangulationError):
    def __init__(self, ridge, facets):
        self.ridge = tuple(ridge)
        self.facets = tuple(facets)
        super().__init__(f"ridge {self.ridge} is shared by facets {self.facets}")


class NotFoldable(TriangulationError):
    """Raised when colour propagation hits a conflict.

    ``witness`` is the dual-graph edge ``(parent, child)`` across which the
    conflict was found, ``vertex`` the vertex that would need two colours.
    """

    def __init__(self, witness, vertex, colors):
        self.witness = tuple(witness)
        self.vertex = vertex
        self.colors = tuple(colors)
        super().__init__(
            f"vertex {vertex} forced to colours {self.colors} across dual edge {self.witness}"
        )


class NotBipartite(TriangulationError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"odd cycle in dual graph: {list(self.cycle)}")


class DisconnectedDualGraph(TriangulationError):
    pass


class MalformedShuffle(TriangulationError):
    pass


class NotABipyramid(TriangulationError):
    pass


class InvalidSplit(TriangulationError):
    pass


class InvalidOrdering(TriangulationError):
    pass


class UnsupportedOrderingCombination(TriangulationError):
    pass


class NotLocallyConvex(TriangulationError):
    def __init__(self, ridge, facets):
        self.ridge = tuple(ridge)
        self.facets = tuple(facets)
        super().__init__(f"lifting folds down across ridge {self.ridge} (facets {self.facets})")


class DegenerateLifting(TriangulationError):
    def __init__(self, ridge, facets):
        self.ridge = tuple(ridge)
        self.facets = tuple(facets)
        super().__init__(f"lifting is flat across ridge {self.ridge} (facets {self.facets})")


class DegenerateBase(TriangulationError):
    pass


class MissingColoring(TriangulationError):
    pass


class MissingLifting(TriangulationError):
    pass


class NegativeCoordinates(TriangulationError):
    pass


class LengthMismatch(TriangulationError):
    pass


class MissingFacets(TriangulationError):
    pass


class UnsupportedFormat(TriangulationError):
    pass


class MissingTemplateS(TriangulationError):
    pass


class TemplateInvalid(TriangulationError):
    pass


class IncompatibleMatching(TriangulationError):
    pass
