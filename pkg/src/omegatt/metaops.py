"""Suspension and opposites of computads, cells, spheres and morphisms.

Both families of operations are defined so that the algebraic laws hold as
plain term equalities:

* suspension renames every generator ``v`` to ``1.v`` one dimension up and
  adds basepoint 0-generators "0" and "1", mirroring the naming of suspended
  globular sets, so suspending a free computad *is* the free computad of the
  suspended globular set, and suspending a composition template gives the
  shifted template verbatim;
* the opposite keeps generator names and reworks coherence cells through
  the canonical position bijection of the opposite scheme, which makes the
  symmetric-difference action laws exact.

Desuspension inverts suspension on its image and reports the first
obstruction path when a term is not a suspension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .computads import (
    CellTerm,
    Coh,
    Computad,
    Sphere,
    Substitution,
    Var,
    sub_get,
    sub_map,
    substitution,
)
from .globular import DimSet
from .trees import op_positions_iso, op_tree, suspend_tree

BASE_MINUS = "0"
BASE_PLUS = "1"


@dataclass(frozen=True)
class BipointedComputad:
    """A computad with two chosen 0-cells."""

    computad: Computad
    base: tuple[CellTerm, CellTerm]

    def __post_init__(self) -> None:
        for b in self.base:
            if b.dim != 0:
                raise ValueError("basepoints must be 0-cells")

    @property
    def base_minus(self) -> CellTerm:
        return self.base[0]

    @property
    def base_plus(self) -> CellTerm:
        return self.base[1]


# ---------------------------------------------------------------------------
# suspension


def suspend_cell(cell: CellTerm) -> CellTerm:
    """Suspend a cell: generators shift to their ``1.``-names one dimension
    up; coherence substitutions additionally send the two fresh root sectors
    to the basepoints."""
    if isinstance(cell, Var):
        return Var(f"1.{cell.name}", cell.dim + 1)
    sub: dict[str, CellTerm] = {
        BASE_MINUS: Var(BASE_MINUS, 0),
        BASE_PLUS: Var(BASE_PLUS, 0),
    }
    for p, v in cell.sub:
        sub[f"1.{p}"] = suspend_cell(v)
    return Coh(suspend_tree(cell.tree), suspend_sphere(cell.sphere), substitution(sub))


def suspend_sphere(sphere: Sphere) -> Sphere:
    return Sphere(suspend_cell(sphere.src), suspend_cell(sphere.tgt))


def suspend_morphism(sigma: Substitution) -> Substitution:
    """Suspend a morphism/substitution: basepoints map to basepoints."""
    out: dict[str, CellTerm] = {
        BASE_MINUS: Var(BASE_MINUS, 0),
        BASE_PLUS: Var(BASE_PLUS, 0),
    }
    for k, v in sigma:
        out[f"1.{k}"] = suspend_cell(v)
    return substitution(out)


def suspend_computad(c: Computad) -> BipointedComputad:
    """Suspend a computad: two fresh basepoint 0-generators plus the shifted
    generators with suspended attaching spheres."""
    gens: list[list[str]] = [[BASE_MINUS, BASE_PLUS]]
    attach: dict[str, Sphere] = {}
    for d in range(c.bound + 1):
        gens.append([f"1.{v}" for v in c.generators_at(d)])
        for v in c.generators_at(d):
            if d == 0:
                attach[f"1.{v}"] = Sphere(Var(BASE_MINUS, 0), Var(BASE_PLUS, 0))
            else:
                attach[f"1.{v}"] = suspend_sphere(c.sphere_of(v))
    return BipointedComputad(
        Computad.make(gens, attach), (Var(BASE_MINUS, 0), Var(BASE_PLUS, 0))
    )


# ---------------------------------------------------------------------------
# desuspension


@dataclass(frozen=True)
class NotASuspension(Exception):
    """A term is outside the image of suspension; path points at the first
    obstruction."""

    path: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        where = "/".join(self.path) or "<root>"
        return f"not a suspension at {where}: {self.message}"


def desuspend_cell(cell: CellTerm, path: tuple[str, ...] = ()) -> CellTerm:
    """Invert :func:`suspend_cell` on its image; raises NotASuspension off it."""
    if isinstance(cell, Var):
        if cell.dim >= 1 and cell.name.startswith("1."):
            return Var(cell.name[2:], cell.dim - 1)
        reason = "a basepoint 0-cell" if cell.dim == 0 else f"generator {cell.name!r} is not shifted"
        raise NotASuspension(path, reason)
    if len(cell.tree.children) != 1:
        raise NotASuspension(
            path + ("tree",), f"scheme has {len(cell.tree.children)} branches, want 1"
        )
    bound = sub_map(cell.sub)
    if bound.get(BASE_MINUS) != Var(BASE_MINUS, 0) or bound.get(BASE_PLUS) != Var(BASE_PLUS, 0):
        raise NotASuspension(path + ("sub",), "root sectors are not sent to the basepoints")
    sub: dict[str, CellTerm] = {}
    for p, v in cell.sub:
        if p in (BASE_MINUS, BASE_PLUS):
            continue
        sub[p[2:]] = desuspend_cell(v, path + ("sub", p))
    return Coh(
        cell.tree.children[0],
        desuspend_sphere(cell.sphere, path + ("sphere",)),
        substitution(sub),
    )


def desuspend_sphere(sphere: Sphere, path: tuple[str, ...] = ()) -> Sphere:
    return Sphere(
        desuspend_cell(sphere.src, path + ("src",)),
        desuspend_cell(sphere.tgt, path + ("tgt",)),
    )


def desuspend_morphism(sigma: Substitution) -> Substitution:
    out: dict[str, CellTerm] = {}
    for k, v in sigma:
        if k in (BASE_MINUS, BASE_PLUS):
            if v != Var(k, 0):
                raise NotASuspension((k,), "basepoint is not fixed")
            continue
        if not k.startswith("1."):
            raise NotASuspension((k,), "key is not a shifted generator")
        out[k[2:]] = desuspend_cell(v, (k,))
    return substitution(out)


def desuspend_computad(c: Computad) -> Computad:
    if c.generators_at(0) != (BASE_MINUS, BASE_PLUS):
        raise NotASuspension((), "0-generators are not exactly the two basepoints")
    gens: list[list[str]] = []
    attach: dict[str, Sphere] = {}
    for d in range(1, c.bound + 1):
        level = []
        for v in c.generators_at(d):
            if not v.startswith("1."):
                raise NotASuspension((v,), "generator is not shifted")
            name = v[2:]
            level.append(name)
            if d == 1:
                want = Sphere(Var(BASE_MINUS, 0), Var(BASE_PLUS, 0))
                if c.sphere_of(v) != want:
                    raise NotASuspension((v,), "1-generator not attached to the basepoints")
            else:
                attach[name] = desuspend_sphere(c.sphere_of(v), (v,))
        gens.append(level)
    return Computad.make(gens, attach)


# ---------------------------------------------------------------------------
# opposites


def rename_cell(rename: Mapping[str, str], cell: CellTerm) -> CellTerm:
    """Rename the ambient generators a cell refers to (coherence spheres are
    untouched: their variables are scheme positions, not ambient names)."""
    if isinstance(cell, Var):
        return Var(rename.get(cell.name, cell.name), cell.dim)
    return Coh(
        cell.tree,
        cell.sphere,
        substitution([(p, rename_cell(rename, v)) for p, v in cell.sub]),
    )


def op_cell(w: DimSet, cell: CellTerm) -> CellTerm:
    """The image of a cell under op_w : cells of C -> cells of op_w(C).

    Generators are preserved.  A coherence moves to the opposite scheme: the
    substitution precomposes with the canonical position bijection, and the
    sphere (swapped when the cell's own dimension is reversed) is renamed
    through the inverse bijection so it lives over the opposite scheme.
    """
    if isinstance(cell, Var):
        return cell
    iso = op_positions_iso(w, cell.tree)
    inv = {q: p for p, q in iso.items()}
    sphere = op_sphere(w, cell.sphere)
    sphere = Sphere(rename_cell(inv, sphere.src), rename_cell(inv, sphere.tgt))
    sub = substitution([(p, op_cell(w, sub_get(cell.sub, q))) for p, q in iso.items()])
    return Coh(op_tree(w, cell.tree), sphere, sub)


def op_sphere(w: DimSet, sphere: Sphere) -> Sphere:
    """Boundary data for a (dim+1)-cell: the two cells swap exactly when
    that dimension is reversed."""
    src, tgt = op_cell(w, sphere.src), op_cell(w, sphere.tgt)
    if sphere.dim + 1 in w:
        src, tgt = tgt, src
    return Sphere(src, tgt)


def op_morphism(w: DimSet, sigma: Substitution) -> Substitution:
    return substitution([(k, op_cell(w, v)) for k, v in sigma])


def op_computad(w: DimSet, c: Computad) -> Computad:
    return Computad.make(
        [list(level) for level in c.generators],
        {v: op_sphere(w, s) for v, s in c.attach},
    )


def op_bipointed(w: DimSet, c: BipointedComputad) -> BipointedComputad:
    base = (c.base_plus, c.base_minus) if 1 in w else c.base
    return BipointedComputad(op_computad(w, c.computad), base)


def swap_basepoints(cell: CellTerm) -> CellTerm:
    """Rename the two suspension basepoints into each other; the comparison
    map between op-of-suspension and suspension-of-op when 1 is reversed."""
    return rename_cell({BASE_MINUS: BASE_PLUS, BASE_PLUS: BASE_MINUS}, cell)
