"""Batanin trees and their globular sets of positions.

A tree ``br(B1, ..., Bn)`` is a pasting scheme: a point with n arrows out
of it, each arrow filled by the scheme of its subtree one dimension up.
Positions are named canonically so that every construction downstream
(boundary inclusions, opposites, suspension) is a map of plain strings:

* the n+1 sectors at the root are ``"0" .. "n"`` (dimension 0);
* a position ``p`` of the i-th child (1-based) becomes ``"i.p"`` one
  dimension up.

So the dimension of a position is the number of dots in its name, and
lexicographic-with-numeric-segments order is the source-to-target sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .globular import BipointedGlobularSet, DimSet, FiniteGlobularSet, nat_key


@dataclass(frozen=True)
class BataninTree:
    """A finite rooted planar tree; children ordered left to right."""

    children: tuple["BataninTree", ...] = ()

    def __repr__(self) -> str:
        return "br[" + ", ".join(repr(c) for c in self.children) + "]"


def br(*children: BataninTree) -> BataninTree:
    return BataninTree(tuple(children))


def tree_to_list(t: BataninTree) -> list:
    return [tree_to_list(c) for c in t.children]


def tree_from_list(data: Sequence) -> BataninTree:
    return BataninTree(tuple(tree_from_list(c) for c in data))


def dim_tree(t: BataninTree) -> int:
    """Height of the tree = dimension of the pasting scheme."""
    return 0 if not t.children else 1 + max(dim_tree(c) for c in t.children)


def is_linear(t: BataninTree) -> bool:
    """True iff the tree is a disk: at most one child all the way down."""
    while t.children:
        if len(t.children) != 1:
            return False
        t = t.children[0]
    return True


def disk_tree(n: int) -> BataninTree:
    """The linear tree of height n (the n-disk pasting scheme)."""
    if n < 0:
        raise ValueError(f"disk_tree: negative dimension {n}")
    t = br()
    for _ in range(n):
        t = br(t)
    return t


def boundary_tree(k: int, t: BataninTree) -> BataninTree:
    """Truncate to height <= k (the k-boundary of the scheme)."""
    if k < 0:
        raise ValueError(f"boundary_tree: negative dimension {k}")
    if k == 0:
        return br()
    return BataninTree(tuple(boundary_tree(k - 1, c) for c in t.children))


def suspend_tree(t: BataninTree) -> BataninTree:
    return br(t)


def comp_tree(n: int, k: int, m: int) -> BataninTree:
    """The scheme for composing an n-cell with an m-cell along a k-cell.

    Requires 0 <= k < min(n, m).  For k = 0 this is two branches, the
    disks of heights n-1 and m-1 side by side; higher k wraps that in k
    more unary levels.
    """
    if not (0 <= k < min(n, m)):
        raise ValueError(f"comp_tree: need 0 <= k < min(n, m), got ({n}, {k}, {m})")
    if k == 0:
        return br(disk_tree(n - 1), disk_tree(m - 1))
    return br(comp_tree(n - 1, k - 1, m - 1))


@lru_cache(maxsize=None)
def positions(t: BataninTree) -> BipointedGlobularSet:
    """The globular set of positions (sectors) of ``t``.

    Bipointed by the leftmost and rightmost root sectors.  Source and
    target of a sector one dimension up are the two root sectors it sits
    between, pushed through the child's own position set.
    """
    n = len(t.children)
    cells: list[list[str]] = [[str(i) for i in range(n + 1)]]
    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    for i, child in enumerate(t.children, start=1):
        sub = positions(child)
        for d, layer in enumerate(sub.carrier.cells):
            while len(cells) <= d + 1:
                cells.append([])
            for p in layer:
                cells[d + 1].append(f"{i}.{p}")
        # dimension-1 positions of t coming from child's dimension-0
        # positions: their boundaries are root sectors i-1 and i.
        for p in sub.carrier.cells[0]:
            src[f"{i}.{p}"] = str(i - 1)
            tgt[f"{i}.{p}"] = str(i)
        for d in range(1, sub.carrier.ndim + 1):
            for p in sub.carrier.cells[d]:
                src[f"{i}.{p}"] = f"{i}.{sub.carrier.src_of(d, p)}"
                tgt[f"{i}.{p}"] = f"{i}.{sub.carrier.tgt_of(d, p)}"
    carrier = FiniteGlobularSet.make(cells, src, tgt)
    return BipointedGlobularSet(carrier, ("0", str(n)))


def pos_dim(p: str) -> int:
    """Dimension of a canonical position name = number of dots."""
    return p.count(".")


@lru_cache(maxsize=None)
def src_inclusion(k: int, t: BataninTree) -> Mapping[str, str]:
    """Positions of ``boundary_tree(k, t)`` -> positions of ``t``, source side.

    Picks the leftmost root sector at the pruned depth; the identity
    everywhere below.  Returned as a plain name map.
    """
    if k < 0:
        raise ValueError(f"src_inclusion: negative dimension {k}")
    if k == 0:
        return {"0": "0"}
    out: dict[str, str] = {str(j): str(j) for j in range(len(t.children) + 1)}
    for i, child in enumerate(t.children, start=1):
        inner = src_inclusion(k - 1, child)
        for p, q in inner.items():
            out[f"{i}.{p}"] = f"{i}.{q}"
    return out


@lru_cache(maxsize=None)
def tgt_inclusion(k: int, t: BataninTree) -> Mapping[str, str]:
    """Positions of ``boundary_tree(k, t)`` -> positions of ``t``, target side."""
    if k < 0:
        raise ValueError(f"tgt_inclusion: negative dimension {k}")
    if k == 0:
        return {"0": str(len(t.children))}
    out: dict[str, str] = {str(j): str(j) for j in range(len(t.children) + 1)}
    for i, child in enumerate(t.children, start=1):
        inner = tgt_inclusion(k - 1, child)
        for p, q in inner.items():
            out[f"{i}.{p}"] = f"{i}.{q}"
    return out


def op_tree(w: DimSet, t: BataninTree) -> BataninTree:
    """Reverse the scheme in the dimensions listed in ``w``.

    Reversing dimension 1 flips the order of the root's children; the
    set shifts down by one for the recursion into each child.
    """
    down = frozenset(d - 1 for d in w if d >= 2)
    kids = tuple(op_tree(down, c) for c in t.children)
    if 1 in w:
        kids = tuple(reversed(kids))
    return BataninTree(kids)


@lru_cache(maxsize=None)
def op_positions_iso(w: DimSet, t: BataninTree) -> Mapping[str, str]:
    """Position rename ``positions(op_tree(w, t)) -> positions(t)``.

    When dimension 1 is reversed, root sector j of the opposite scheme
    is sector n - j of the original, and branch i is branch n + 1 - i;
    otherwise branches keep their index.  Recurses with the shifted set.
    """
    n = len(t.children)
    down = frozenset(d - 1 for d in w if d >= 2)
    out: dict[str, str] = {}
    if 1 in w:
        for j in range(n + 1):
            out[str(j)] = str(n - j)
        for i in range(1, n + 1):
            child = t.children[n - i]
            inner = op_positions_iso(down, child)
            for p, q in inner.items():
                out[f"{i}.{p}"] = f"{n + 1 - i}.{q}"
    else:
        for j in range(n + 1):
            out[str(j)] = str(j)
        for i, child in enumerate(t.children, start=1):
            inner = op_positions_iso(down, child)
            for p, q in inner.items():
                out[f"{i}.{p}"] = f"{i}.{q}"
    return out


def node_count(t: BataninTree) -> int:
    return 1 + sum(node_count(c) for c in t.children)


def trees_with_nodes(n: int) -> Iterator[BataninTree]:
    """All planar rooted trees with exactly n nodes, in a stable order."""
    if n <= 0:
        return
    if n == 1:
        yield br()
        return
    # Distribute the remaining n-1 nodes among an ordered forest.
    for forest in _forests_with_nodes(n - 1):
        yield BataninTree(forest)


def _forests_with_nodes(n: int) -> Iterator[tuple[BataninTree, ...]]:
    """All ordered forests with exactly n >= 1 nodes in total."""
    for first in range(1, n + 1):
        for head in trees_with_nodes(first):
            if first == n:
                yield (head,)
            else:
                for tail in _forests_with_nodes(n - first):
                    yield (head,) + tail


def all_trees(max_nodes: int) -> Iterator[BataninTree]:
    """All trees with 1..max_nodes nodes, smaller first."""
    for n in range(1, max_nodes + 1):
        yield from trees_with_nodes(n)


def sorted_positions(t: BataninTree) -> list[str]:
    """All position names of ``t`` in canonical (natural-key) order."""
    return sorted((p for _, p in positions(t).carrier.all_cells()), key=nat_key)
