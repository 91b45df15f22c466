"""one-sided layouts whose dual graph contains a given rooted tree"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Literal, Mapping, Sequence, Tuple

from ..core.errors import IdMismatch, InvalidTree
from ..rel.adjacency import labeled_adjacencies
from ..rel.layout import Layout, Rect

TreeOrientation = Literal["root-at-bottom", "root-at-left"]


@dataclass(frozen=True)
class RootedTree:
    root: str
    # children in left-to-right order
    children: Dict[str, Tuple[str, ...]]

    @classmethod
    def of(cls, root: str, children: Mapping[str, Sequence[str]]) -> "RootedTree":
        kids = {v: tuple(cs) for v, cs in children.items()}
        for cs in list(kids.values()):
            for c in cs:
                kids.setdefault(c, ())
        kids.setdefault(root, ())
        parent: Dict[str, str] = {}
        for v, cs in kids.items():
            for c in cs:
                if c in parent:
                    raise InvalidTree(f"{c} has two parents: {parent[c]} and {v}")
                parent[c] = v
        if root in parent:
            raise InvalidTree(f"root {root} has a parent")
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for c in kids[v]:
                seen.add(c)
                stack.append(c)
        if seen != set(kids):
            raise InvalidTree(f"nodes not reachable from the root: {sorted(set(kids) - seen)}")
        return cls(root, kids)

    @cached_property
    def parent(self) -> Dict[str, str]:
        return {c: v for v, cs in self.children.items() for c in cs}

    @property
    def nodes(self) -> List[str]:
        return sorted(self.children)

    def edges(self) -> List[Tuple[str, str]]:
        return [(v, c) for v, cs in sorted(self.children.items()) for c in cs]

    def postorder(self) -> List[str]:
        out: List[str] = []
        stack = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                out.append(v)
                continue
            stack.append((v, True))
            stack.extend((c, False) for c in reversed(self.children[v]))
        return out


def subtree_weights(t: RootedTree) -> Dict[str, Fraction]:
    """width over height of each subtree drawn with its root at the left"""
    rho: Dict[str, Fraction] = {}
    for v in t.postorder():
        kids = t.children[v]
        rho[v] = Fraction(1) if not kids else 2 / sum((rho[c] for c in kids), Fraction(0))
    return rho


def layout_from_tree(t: RootedTree, orientation: TreeOrientation = "root-at-bottom") -> Layout:
    rho = subtree_weights(t)
    rects: Dict[str, Rect] = {}
    if orientation == "root-at-bottom":
        box = Rect(Fraction(0), Fraction(0), Fraction(1), rho[t.root])
    elif orientation == "root-at-left":
        box = Rect(Fraction(0), Fraction(0), rho[t.root], Fraction(1))
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    stack = [(t.root, box, orientation == "root-at-bottom")]
    while stack:
        v, r, at_bottom = stack.pop()
        kids = t.children[v]
        if not kids:
            rects[v] = r
            continue
        total = sum((rho[c] for c in kids), Fraction(0))
        if at_bottom:
            # root takes the lower half, children side by side above it
            half = r.h / 2
            rects[v] = Rect(r.x, r.y, r.w, half)
            x = r.x
            for c in kids:
                w = r.w * rho[c] / total
                stack.append((c, Rect(x, r.y + half, w, half), False))
                x += w
        else:
            half = r.w / 2
            rects[v] = Rect(r.x, r.y, half, r.h)
            y = r.y
            for c in kids:
                h = r.h * rho[c] / total
                stack.append((c, Rect(r.x + half, y, half, h), True))
                y += h
    return Layout.build(box.w, box.h, rects)


def verify_spanning(t: RootedTree, l: Layout) -> bool:
    """every tree edge is a contact between two rectangles of l"""
    if set(t.children) != set(l.ids):
        raise IdMismatch(set(t.children), set(l.ids))
    contacts = {frozenset(e) for e in labeled_adjacencies(l)}
    return all(frozenset(e) in contacts for e in t.edges())
