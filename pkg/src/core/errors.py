from __future__ import annotations

from typing import Any, Optional, Sequence


class LayoutError(Exception):
    pass


# input problems


class InvalidGraph(LayoutError, ValueError):
    pass


class NonTriangularFace(InvalidGraph):
    def __init__(self, face: Sequence[str]):
        self.face = tuple(face)
        super().__init__(f"inner face is not a triangle: {list(self.face)}")


class InconsistentRotation(InvalidGraph):
    def __init__(self, edge: Sequence[str], reason: str = "edge missing from one endpoint rotation"):
        self.edge = tuple(edge)
        super().__init__(f"{reason}: {list(self.edge)}")


class Disconnected(InvalidGraph):
    def __init__(self, vertex: Optional[str] = None):
        self.vertex = vertex
        super().__init__(f"graph is not connected (unreachable: {vertex})")


class OuterFaceMismatch(InvalidGraph):
    def __init__(self, outer: Sequence[str]):
        self.outer = tuple(outer)
        super().__init__(f"outer face {list(self.outer)} is not a face of the rotation system")


class InvalidLayout(LayoutError, ValueError):
    pass


class InvalidWeights(LayoutError, ValueError):
    pass


class InvalidTree(LayoutError, ValueError):
    pass


class IdMismatch(LayoutError, ValueError):
    def __init__(self, left: Any, right: Any):
        self.left = left
        self.right = right
        super().__init__(f"rectangle ids differ: {sorted(left)} vs {sorted(right)}")


class AdjacencyMismatch(LayoutError, ValueError):
    def __init__(self, missing: Sequence[Any] = (), extra: Sequence[Any] = ()):
        self.missing = list(missing)
        self.extra = list(extra)
        super().__init__(f"layout adjacencies differ from host (missing {self.missing}, extra {self.extra})")


class IllegalMove(LayoutError, ValueError):
    pass


class NotDownwardClosed(LayoutError, ValueError):
    def __init__(self, element: Any, below: Any):
        self.element = element
        self.below = below
        super().__init__(f"{element} is in the lower set but {below} is not")


# domain outcomes


class NotProper(LayoutError):
    pass


class NontrivialCycleHost(LayoutError):
    def __init__(self, cycle: Any):
        self.cycle = cycle
        super().__init__(f"host has a nontrivial separating four-cycle: {cycle}")


class NotComparable(LayoutError):
    pass


class MissingLeaf(LayoutError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"no layout for component {index}")


class OutsidePolytope(LayoutError):
    pass


class NoConvergence(LayoutError):
    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"area solver stopped after {iterations} iterations, residual {residual:.3e}")


# caps


class CapExceeded(LayoutError):
    def __init__(self, cap: int):
        self.cap = cap
        self.explored = cap
        super().__init__(f"enumeration cap of {cap} labelings exceeded")


class BudgetExceeded(LayoutError):
    def __init__(self, explored: int, reason: str = "set cap"):
        self.explored = explored
        super().__init__(f"search budget exhausted ({reason}) after {explored} candidates")
