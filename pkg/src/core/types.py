from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Tuple

Color = Literal["red", "blue"]
Direction = Literal["up", "down"]
Orientation = Literal["vertical", "horizontal"]
Side = Literal["left", "top", "right", "bottom"]
WeightKind = Literal["area", "perimeter"]

SIDES: Tuple[Side, ...] = ("left", "top", "right", "bottom")

# unordered edge, endpoints sorted
Edge = Tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Label:
    """color plus orientation of one edge; blue tail is left of head, red tail is below head"""

    color: Color
    tail: str
    head: str

    def reversed(self) -> "Label":
        return Label(self.color, self.head, self.tail)


@dataclass(frozen=True)
class Corners:
    """ids of the four exterior vertices"""

    left: str
    top: str
    right: str
    bottom: str

    def as_tuple(self) -> Tuple[str, str, str, str]:
        return (self.left, self.top, self.right, self.bottom)

    def side_of(self, v: str) -> Side:
        for side, ext in zip(SIDES, self.as_tuple()):
            if ext == v:
                return side
        raise KeyError(v)


DEFAULT_CORNERS = Corners(left="<left>", top="<top>", right="<right>", bottom="<bottom>")
