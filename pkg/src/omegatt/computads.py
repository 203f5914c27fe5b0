"""Finite computads and the inductive cell syntax over them.

A computad lists generator names per dimension; each generator of positive
dimension is attached along a sphere (a parallel pair of cells) one
dimension down.  Cells are raw syntax: a variable, or a coherence
``Coh(B, A, tau)`` built from a pasting scheme ``B``, a full sphere ``A``
over the scheme's free computad, and a substitution ``tau`` sending each
position of ``B`` to a cell of the ambient computad.  There is no quotient:
equality of cells is equality of terms, which is what lets the suspension /
opposite / hom equations downstream be checked with ``==``.

Substitutions and computad morphisms share one representation, a flat
name-keyed tuple of (name, cell) pairs in canonical order; this relies on
generator names being unique across dimensions, which ``Computad.make``
enforces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .globular import FiniteGlobularSet, nat_key
from .trees import (
    BataninTree,
    boundary_tree,
    dim_tree,
    pos_dim,
    positions,
    src_inclusion,
    tgt_inclusion,
    tree_from_list,
    tree_to_list,
)

# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    """A generator used as a cell."""

    name: str
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"cell dimension must be >= 0, got {self.dim}")

    def __repr__(self) -> str:
        return f"Var({self.name!r}, {self.dim})"


@dataclass(frozen=True)
class Sphere:
    """A parallel pair of cells; the boundary data for one dimension up."""

    src: "CellTerm"
    tgt: "CellTerm"

    def __post_init__(self) -> None:
        if self.src.dim != self.tgt.dim:
            raise ValueError(
                f"sphere cells must share a dimension: {self.src.dim} != {self.tgt.dim}"
            )

    @property
    def dim(self) -> int:
        return self.src.dim


Substitution = tuple[tuple[str, "CellTerm"], ...]


def substitution(mapping: Mapping[str, "CellTerm"] | Iterable[tuple[str, "CellTerm"]]) -> Substitution:
    """Freeze a name -> cell assignment in canonical (natural-key) order."""
    items = mapping.items() if isinstance(mapping, Mapping) else mapping
    out = tuple(sorted(items, key=lambda kv: nat_key(kv[0])))
    names = [k for k, _ in out]
    if len(set(names)) != len(names):
        raise ValueError("substitution binds a name twice")
    return out


def sub_get(sub: Substitution, name: str) -> "CellTerm":
    for k, v in sub:
        if k == name:
            return v
    raise KeyError(name)


def sub_map(sub: Substitution) -> dict[str, "CellTerm"]:
    return dict(sub)


@dataclass(frozen=True)
class Coh:
    """A coherence cell: scheme, full sphere over the scheme, substitution."""

    tree: BataninTree
    sphere: Sphere
    sub: Substitution

    @property
    def dim(self) -> int:
        return self.sphere.dim + 1

    def __repr__(self) -> str:
        return f"Coh({self.tree!r}, {self.sphere!r}, <{len(self.sub)} positions>)"


CellTerm = Union[Var, Coh]


# ---------------------------------------------------------------------------
# computads


@dataclass(frozen=True)
class Computad:
    """Generator names per dimension with attaching spheres.

    ``generators[d]`` is the tuple of d-generator names in canonical order;
    ``attach`` binds each generator of positive dimension to its sphere.
    Use :meth:`make`, which validates the attaching spheres bottom-up.
    """

    generators: tuple[tuple[str, ...], ...]
    attach: tuple[tuple[str, Sphere], ...]

    @staticmethod
    def make(
        generators_by_dim: Iterable[Iterable[str]],
        attach: Mapping[str, Sphere],
    ) -> "Computad":
        levels = [tuple(sorted(level, key=nat_key)) for level in generators_by_dim]
        while levels and not levels[-1]:
            levels.pop()
        seen: set[str] = set()
        for level in levels:
            for v in level:
                if v in seen:
                    raise ValueError(f"duplicate generator name {v!r}")
                seen.add(v)
        pairs: list[tuple[str, Sphere]] = []
        for d in range(1, len(levels)):
            for v in levels[d]:
                if v not in attach:
                    raise ValueError(f"generator {v!r} has no attaching sphere")
                pairs.append((v, attach[v]))
        c = Computad(tuple(levels), tuple(pairs))
        for d in range(1, len(levels)):
            lower = c.truncate(d - 1)
            for v in levels[d]:
                sphere = c.sphere_of(v)
                if sphere.dim != d - 1:
                    raise ValueError(
                        f"attaching sphere of {v!r} has dimension {sphere.dim}, want {d - 1}"
                    )
                typecheck_cell(lower, sphere.src)
                typecheck_cell(lower, sphere.tgt)
                if not parallel(lower, sphere.src, sphere.tgt):
                    raise ValueError(f"attaching sphere of {v!r} is not parallel")
        return c

    @property
    def bound(self) -> int:
        """Largest dimension carrying generators (-1 if none)."""
        return len(self.generators) - 1

    def generators_at(self, d: int) -> tuple[str, ...]:
        return self.generators[d] if 0 <= d <= self.bound else ()

    def has_generator(self, name: str) -> bool:
        return any(name in level for level in self.generators)

    def dim_of(self, name: str) -> int:
        for d, level in enumerate(self.generators):
            if name in level:
                return d
        raise KeyError(name)

    def sphere_of(self, name: str) -> Sphere:
        for k, s in self.attach:
            if k == name:
                return s
        raise KeyError(name)

    def var(self, name: str) -> Var:
        return Var(name, self.dim_of(name))

    def truncate(self, d: int) -> "Computad":
        if d >= self.bound:
            return self
        levels = self.generators[: d + 1]
        keep = {v for level in levels for v in level}
        return Computad(levels, tuple((k, s) for k, s in self.attach if k in keep))


def free_computad(x: FiniteGlobularSet) -> Computad:
    """The computad with one generator per cell of ``x``, disk attachments."""
    attach: dict[str, Sphere] = {}
    for d in range(1, x.ndim + 1):
        for c in x.cells_at(d):
            attach[c] = Sphere(Var(x.src_of(d, c), d - 1), Var(x.tgt_of(d, c), d - 1))
    return Computad.make([list(level) for level in x.cells], attach)


@lru_cache(maxsize=None)
def pasting_computad(t: BataninTree) -> Computad:
    """Free computad on the positions of a pasting scheme (cached)."""
    return free_computad(positions(t).carrier)


def identity_sub(c: Computad) -> Substitution:
    return substitution({v: Var(v, d) for d in range(c.bound + 1) for v in c.generators_at(d)})


# ---------------------------------------------------------------------------
# boundary, support, fullness


def apply_morphism(sigma: Substitution, cell: CellTerm) -> CellTerm:
    """Push a cell along a morphism given by its action on generators.

    A coherence keeps its scheme and sphere (those live over the pasting
    computad, not the ambient one); only the outer substitution moves.
    """
    if isinstance(cell, Var):
        return sub_get(sigma, cell.name)
    return Coh(
        cell.tree,
        cell.sphere,
        substitution([(p, apply_morphism(sigma, v)) for p, v in cell.sub]),
    )


def compose_morphisms(sigma: Substitution, tau: Substitution) -> Substitution:
    """sigma after tau, as an action on tau's keys."""
    return substitution([(k, apply_morphism(sigma, v)) for k, v in tau])


def cell_boundary(c: Computad, cell: CellTerm) -> Sphere:
    """The sphere one dimension down: attachment for a Var, the coherence
    sphere pushed along the substitution for a Coh."""
    if cell.dim == 0:
        raise ValueError("0-cells have no boundary")
    if isinstance(cell, Var):
        return c.sphere_of(cell.name)
    return Sphere(
        apply_morphism(cell.sub, cell.sphere.src),
        apply_morphism(cell.sub, cell.sphere.tgt),
    )


def boundary_at(c: Computad, cell: CellTerm, k: int) -> Sphere:
    """Iterated boundary down to a k-sphere (k < dim of the cell)."""
    if not 0 <= k < cell.dim:
        raise ValueError(f"no {k}-boundary of a {cell.dim}-cell")
    sphere = cell_boundary(c, cell)
    while sphere.dim > k:
        sphere = Sphere(cell_boundary(c, sphere.src).src, cell_boundary(c, sphere.tgt).tgt)
    return sphere


def parallel(c: Computad, a: CellTerm, b: CellTerm) -> bool:
    if a.dim != b.dim:
        return False
    if a.dim == 0:
        return True
    return cell_boundary(c, a) == cell_boundary(c, b)


def support(c: Computad, cell: CellTerm) -> frozenset[str]:
    """Generators a cell depends on, including those of its boundary."""
    if isinstance(cell, Var):
        out = frozenset({cell.name})
        if cell.dim > 0:
            sphere = c.sphere_of(cell.name)
            out |= support(c, sphere.src) | support(c, sphere.tgt)
        return out
    out = frozenset()
    for _, v in cell.sub:
        out |= support(c, v)
    return out


def is_full(b: BataninTree, a: Sphere) -> bool:
    """Fullness of a sphere over a pasting scheme: the source cell uses
    exactly the source-inclusion image of the scheme's n-boundary, and
    dually for the target."""
    n = a.dim
    if dim_tree(b) > n + 1:
        raise ValueError(
            f"sphere of dimension {n} cannot be full over a scheme of dimension {dim_tree(b)}"
        )
    pc = pasting_computad(b)
    src_image = frozenset(src_inclusion(n, b).values())
    tgt_image = frozenset(tgt_inclusion(n, b).values())
    return support(pc, a.src) == src_image and support(pc, a.tgt) == tgt_image


# ---------------------------------------------------------------------------
# typechecking


@dataclass(frozen=True)
class TypecheckError(Exception):
    """First failure found while checking a cell, with a path into the term."""

    code: str  # UnknownGenerator | DimensionMismatch | NotParallel | NotFull | BadSubstitution
    path: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        where = "/".join(self.path) or "<root>"
        return f"{self.code} at {where}: {self.message}"


def typecheck_cell(c: Computad, cell: CellTerm, path: tuple[str, ...] = ()) -> None:
    """Validate a cell against a computad; raises TypecheckError on failure."""
    if isinstance(cell, Var):
        if not c.has_generator(cell.name):
            raise TypecheckError("UnknownGenerator", path, f"no generator named {cell.name!r}")
        d = c.dim_of(cell.name)
        if d != cell.dim:
            raise TypecheckError(
                "DimensionMismatch",
                path,
                f"generator {cell.name!r} has dimension {d}, used at {cell.dim}",
            )
        return
    if dim_tree(cell.tree) > cell.dim:
        raise TypecheckError(
            "DimensionMismatch",
            path + ("tree",),
            f"scheme of dimension {dim_tree(cell.tree)} in a {cell.dim}-cell",
        )
    pc = pasting_computad(cell.tree)
    typecheck_cell(pc, cell.sphere.src, path + ("sphere", "src"))
    typecheck_cell(pc, cell.sphere.tgt, path + ("sphere", "tgt"))
    if not parallel(pc, cell.sphere.src, cell.sphere.tgt):
        raise TypecheckError(
            "NotParallel", path + ("sphere",), "coherence sphere cells are not parallel"
        )
    if not is_full(cell.tree, cell.sphere):
        raise TypecheckError(
            "NotFull", path + ("sphere",), "coherence sphere is not full over its scheme"
        )
    pos = positions(cell.tree).carrier
    want = {p for _, p in pos.all_cells()}
    got = {k for k, _ in cell.sub}
    if want != got:
        missing, extra = sorted(want - got, key=nat_key), sorted(got - want, key=nat_key)
        raise TypecheckError(
            "BadSubstitution",
            path + ("sub",),
            f"positions mismatch: missing {missing}, extra {extra}",
        )
    for p, v in cell.sub:
        if v.dim != pos_dim(p):
            raise TypecheckError(
                "DimensionMismatch",
                path + ("sub", p),
                f"position {p} has dimension {pos_dim(p)}, assigned a {v.dim}-cell",
            )
        typecheck_cell(c, v, path + ("sub", p))
    for d in range(1, pos.ndim + 1):
        for p in pos.cells_at(d):
            want_sphere = Sphere(sub_get(cell.sub, pos.src_of(d, p)), sub_get(cell.sub, pos.tgt_of(d, p)))
            if cell_boundary(c, sub_get(cell.sub, p)) != want_sphere:
                raise TypecheckError(
                    "BadSubstitution",
                    path + ("sub", p),
                    f"assignment at {p} does not match the boundaries of its sector",
                )


def is_well_typed(c: Computad, cell: CellTerm) -> bool:
    try:
        typecheck_cell(c, cell)
    except TypecheckError:
        return False
    return True


def typecheck_morphism(dom: Computad, cod: Computad, sigma: Substitution) -> None:
    """A morphism must bind every generator of ``dom`` to a cell of ``cod`` of
    the same dimension, compatibly with the attaching spheres."""
    bound = sub_map(sigma)
    for d in range(dom.bound + 1):
        for v in dom.generators_at(d):
            if v not in bound:
                raise TypecheckError("BadSubstitution", (v,), f"generator {v!r} unbound")
            cell = bound[v]
            if cell.dim != d:
                raise TypecheckError(
                    "DimensionMismatch", (v,), f"{v!r} has dimension {d}, image has {cell.dim}"
                )
            typecheck_cell(cod, cell, (v,))
            if d >= 1:
                want = dom.sphere_of(v)
                got = cell_boundary(cod, cell)
                if got != Sphere(apply_morphism(sigma, want.src), apply_morphism(sigma, want.tgt)):
                    raise TypecheckError(
                        "BadSubstitution", (v,), f"image of {v!r} has the wrong boundary"
                    )


# ---------------------------------------------------------------------------
# the counit: evaluating cells of the free computad on the cells of C


def cell_key(cell: CellTerm) -> str:
    """Canonical compact string for a cell; injective on well-formed terms.

    Used to name the generators of double computads (whose generators *are*
    cells), keeping those names deterministic and self-describing.
    """
    if isinstance(cell, Var):
        return cell.name
    inner = ";".join(f"{p}:={cell_key(v)}" for p, v in cell.sub)
    return (
        f"coh{tree_to_list(cell.tree)}"
        f"{{{cell_key(cell.sphere.src)}->{cell_key(cell.sphere.tgt)}}}"
        f"({inner})"
    )


def double_computad(c: Computad, cells: Iterable[CellTerm]) -> tuple[Computad, dict[str, CellTerm]]:
    """Free computad on a finite boundary-closed family of cells of ``c``.

    The family is closed under iterated boundaries automatically.  Returns
    the computad (generator names are :func:`cell_key` strings) and the
    denotation map sending each generator name back to the cell it names.
    """
    todo = list(cells)
    layers: dict[int, dict[str, CellTerm]] = {}
    denote: dict[str, CellTerm] = {}
    while todo:
        cell = todo.pop()
        key = cell_key(cell)
        if key in denote:
            continue
        denote[key] = cell
        layers.setdefault(cell.dim, {})[key] = cell
        if cell.dim > 0:
            sphere = cell_boundary(c, cell)
            todo.append(sphere.src)
            todo.append(sphere.tgt)
    ndim = max(layers) if layers else -1
    cells_by_dim = [list(layers.get(d, {})) for d in range(ndim + 1)]
    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    for d in range(1, ndim + 1):
        for key, cell in layers.get(d, {}).items():
            sphere = cell_boundary(c, cell)
            src[key] = cell_key(sphere.src)
            tgt[key] = cell_key(sphere.tgt)
    return free_computad(FiniteGlobularSet.make(cells_by_dim, src, tgt)), denote


def counit_eval(
    c: Computad, cell: CellTerm, denote: Mapping[str, CellTerm] | None = None
) -> CellTerm:
    """Evaluate a cell over a free computad whose generators denote cells of
    ``c``: each Var becomes the cell it names, coherences evaluate their
    substitutions.  ``denote`` defaults to the generators of ``c`` itself,
    which makes this the counit on free_computad(underlying globular set)."""
    if isinstance(cell, Var):
        if denote is None:
            return c.var(cell.name)
        return denote[cell.name]
    return Coh(
        cell.tree,
        cell.sphere,
        substitution([(p, counit_eval(c, v, denote)) for p, v in cell.sub]),
    )


# ---------------------------------------------------------------------------
# JSON


def cell_to_json(cell: CellTerm) -> dict:
    if isinstance(cell, Var):
        return {"var": cell.name}
    return {
        "coh": {
            "tree": tree_to_list(cell.tree),
            "sphere": {
                "src": cell_to_json(cell.sphere.src),
                "tgt": cell_to_json(cell.sphere.tgt),
            },
            "sub": {p: cell_to_json(v) for p, v in cell.sub},
        }
    }


def cell_from_json(obj: Mapping, dim_of) -> CellTerm:
    """Decode a cell; ``dim_of`` resolves dimensions of Var names at this
    level (the ambient computad's ``dim_of`` at top level, position depth
    inside coherence spheres)."""
    if "var" in obj:
        return Var(obj["var"], dim_of(obj["var"]))
    body = obj["coh"]
    tree = tree_from_list(body["tree"])
    sphere = Sphere(
        cell_from_json(body["sphere"]["src"], pos_dim),
        cell_from_json(body["sphere"]["tgt"], pos_dim),
    )
    sub = substitution({p: cell_from_json(v, dim_of) for p, v in body["sub"].items()})
    return Coh(tree, sphere, sub)


def computad_to_json(c: Computad) -> dict:
    return {
        "dims": [list(level) for level in c.generators],
        "attach": {
            v: {"src": cell_to_json(s.src), "tgt": cell_to_json(s.tgt)}
            for v, s in c.attach
        },
    }


def computad_from_json(obj: Mapping) -> Computad:
    levels = [list(level) for level in obj["dims"]]
    dim_of: dict[str, int] = {v: d for d, level in enumerate(levels) for v in level}
    attach = {
        v: Sphere(
            cell_from_json(s["src"], dim_of.__getitem__),
            cell_from_json(s["tgt"], dim_of.__getitem__),
        )
        for v, s in obj.get("attach", {}).items()
    }
    return Computad.make(levels, attach)
