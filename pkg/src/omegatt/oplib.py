"""The operation library: composition templates, identities, instances, and
the Eckmann-Hilton computad.

``comp_cell(n, k, m)`` is the generic k-composite of an n-cell with an
m-cell, a coherence over ``comp_tree(n, k, m)`` with the identity
substitution; ``compose`` instantiates it on actual cells.  Templates are
built by the triple recursion on (n, k, m): the codimension-one square case
reads its sphere off the boundary-disk inclusions, and every other case
lifts the template one dimension down through the source/target inclusions
of the scheme.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .computads import (
    CellTerm,
    Coh,
    Computad,
    Sphere,
    Var,
    boundary_at,
    identity_sub,
    pasting_computad,
    substitution,
)
from .metaops import BipointedComputad, rename_cell
from .trees import (
    boundary_tree,
    comp_tree,
    disk_tree,
    positions,
    src_inclusion,
    tgt_inclusion,
)


def _disk_top(k: int) -> str:
    """The unique top-dimensional position of the k-disk scheme."""
    return "1." * k + "0"


@dataclass(frozen=True)
class CompTemplate:
    """The generic k-composite of an n-cell with an m-cell."""

    n: int
    k: int
    m: int
    cell: CellTerm


@lru_cache(maxsize=None)
def comp_template(n: int, k: int, m: int) -> CompTemplate:
    if not (0 <= k < min(n, m)):
        raise ValueError(f"comp_cell: need 0 <= k < min(n, m), got ({n}, {k}, {m})")
    b = comp_tree(n, k, m)
    if n == m == k + 1:
        # square case: the scheme's k-boundary is the k-disk, and the sphere
        # is the pair of images of its top cell under the two inclusions.
        assert boundary_tree(k, b) == disk_tree(k)
        top = _disk_top(k)
        sphere = Sphere(
            Var(src_inclusion(k, b)[top], k), Var(tgt_inclusion(k, b)[top], k)
        )
    else:
        if n == m:
            prev = comp_cell(n - 1, k, m - 1)
        elif n > m:
            prev = comp_cell(n - 1, k, m)
        else:
            prev = comp_cell(n, k, m - 1)
        d = max(n, m) - 1
        assert boundary_tree(d, b) == prev.tree
        sphere = Sphere(
            rename_cell(src_inclusion(d, b), prev),
            rename_cell(tgt_inclusion(d, b), prev),
        )
    cell = Coh(b, sphere, identity_sub(pasting_computad(b)))
    return CompTemplate(n, k, m, cell)


def comp_cell(n: int, k: int, m: int) -> CellTerm:
    return comp_template(n, k, m).cell


def identity_cell(c: Computad, cell: CellTerm) -> CellTerm:
    """The identity coherence on a cell: the disk scheme filled by the cell
    and its iterated boundaries, with the degenerate full sphere on top."""
    n = cell.dim
    top = _disk_top(n)
    sub: dict[str, CellTerm] = {top: cell}
    for d in range(n):
        sphere = boundary_at(c, cell, d)
        sub["1." * d + "0"] = sphere.src
        sub["1." * d + "1"] = sphere.tgt
    return Coh(disk_tree(n), Sphere(Var(top, n), Var(top, n)), substitution(sub))


@dataclass(frozen=True)
class BoundaryMismatch(Exception):
    """The two cells of a would-be composite do not share the k-boundary."""

    k: int
    message: str

    def __str__(self) -> str:
        return f"cannot compose along dimension {self.k}: {self.message}"


def compose(c: Computad, x: CellTerm, k: int, y: CellTerm) -> CellTerm:
    """The k-composite of two cells, by instantiating the matching template."""
    n, m = x.dim, y.dim
    if not 0 <= k < min(n, m):
        raise BoundaryMismatch(k, f"cells have dimensions {n} and {m}")
    if boundary_at(c, x, k).tgt != boundary_at(c, y, k).src:
        raise BoundaryMismatch(k, "k-target of the first is not the k-source of the second")
    sub: dict[str, CellTerm] = {}
    for j in range(k):
        sphere = boundary_at(c, x, j)
        sub["1." * j + "0"] = sphere.src
        sub["1." * j + "1"] = sphere.tgt
    sub["1." * k + "0"] = boundary_at(c, x, k).src
    sub["1." * k + "1"] = boundary_at(c, x, k).tgt
    sub["1." * k + "2"] = boundary_at(c, y, k).tgt
    for i, cell in ((1, x), (2, y)):
        prefix = "1." * k + f"{i}."
        height = cell.dim - k - 1
        for d in range(height):
            sphere = boundary_at(c, cell, k + 1 + d)
            sub[prefix + "1." * d + "0"] = sphere.src
            sub[prefix + "1." * d + "1"] = sphere.tgt
        sub[prefix + "1." * height + "0"] = cell
    template = comp_cell(n, k, m)
    return Coh(template.tree, template.sphere, substitution(sub))


def eh_computad() -> BipointedComputad:
    """One 0-generator x and two parallel scalar 2-generators a, b attached
    along (id x, id x); the stage for the Eckmann-Hilton argument."""
    point = Computad.make([["x"]], {})
    idx = identity_cell(point, Var("x", 0))
    sphere = Sphere(idx, idx)
    computad = Computad.make([["x"], [], ["a", "b"]], {"a": sphere, "b": sphere})
    return BipointedComputad(computad, (Var("x", 0), Var("x", 0)))
