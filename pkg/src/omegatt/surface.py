"""Surface syntax for computads and cells (.ctt files).

A source file is a sequence of computad blocks and cell bindings::

    # two arrows and their composite
    computad walking { x : * ; y : * ; z : * ; f : x -> y ; g : y -> z ; }
    let fg = comp(1,0,1)[f, g]

Cell expressions are references, explicit coherences
``coh [[],[]] { 0 -> 2 } []``, composition templates/instances
``comp(n,k,m)[...]``, and the computed forms ``id(e)``, ``susp(e)``,
``op{dims}(e)`` and ``homfactor(e)``.

Inside a coherence, identifiers name the positions of its own scheme; the
letters x,y,z,u,v,w (dimension 0), f,g,h,k,l (dimension 1) and a,b,c,d,e
(dimension 2) may be used as aliases for the positions of that dimension in
canonical order, so the two-arrow composite can be written
``coh [[],[]] { x -> z } []``.  Printing always uses the canonical numeric
position names; printing is deterministic and re-parses to the same terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .computads import (
    CellTerm,
    Coh,
    Computad,
    Sphere,
    TypecheckError,
    Var,
    boundary_at,
    identity_sub,
    pasting_computad,
    substitution,
    typecheck_cell,
)
from .globular import dimset, nat_key
from .homcat import HomCell, HomGenerator, hom_factor
from .metaops import BipointedComputad, op_cell, op_computad, suspend_cell, suspend_computad
from .oplib import BoundaryMismatch, comp_cell, compose, identity_cell
from .trees import BataninTree, pos_dim, positions

POSITION_ALIASES = {0: "xyzuvw", 1: "fghkl", 2: "abcde"}


@dataclass(frozen=True)
class SourceLocation:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class SurfaceError(Exception):
    location: SourceLocation
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


# ---------------------------------------------------------------------------
# lexer

_PUNCT2 = ("=>", "->")
_PUNCT1 = "{}[](),;:*="


@dataclass(frozen=True)
class Token:
    kind: str  # ident | name | num | pos | punct | eof
    text: str
    location: SourceLocation


KEYWORDS = frozenset(
    {"computad", "let", "coh", "comp", "id", "susp", "op", "homfactor"}
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(text)

    def here() -> SourceLocation:
        return SourceLocation(line, col)

    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            col, i = col + 1, i + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        loc = here()
        if text.startswith(_PUNCT2[0], i) or text.startswith(_PUNCT2[1], i):
            tokens.append(Token("punct", text[i : i + 2], loc))
            col, i = col + 2, i + 2
            continue
        if ch in _PUNCT1:
            tokens.append(Token("punct", ch, loc))
            col, i = col + 1, i + 1
            continue
        if ch.isalnum() or ch == "_":
            # a word: dotted segments of [A-Za-z0-9_], e.g. an identifier, a
            # number, a position path 1.2.0, or a suspended name like 1.x
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            dotted = False
            while j + 1 < n and text[j] == "." and (text[j + 1].isalnum() or text[j + 1] == "_"):
                dotted = True
                j += 1
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
            word = text[i:j]
            if all(seg.isdigit() for seg in word.split(".")):
                kind = "pos" if dotted else "num"
            elif dotted:
                kind = "name"
            else:
                kind = "ident"
            tokens.append(Token(kind, word, loc))
            col, i = col + (j - i), j
            continue
        raise SurfaceError(loc, f"unexpected character {ch!r}")
    tokens.append(Token("eof", "", here()))
    return tokens


# ---------------------------------------------------------------------------
# syntax trees


@dataclass(frozen=True)
class RefExpr:
    name: str
    location: SourceLocation


@dataclass(frozen=True)
class CohExpr:
    tree: BataninTree
    src: "CellExpr"
    tgt: "CellExpr"
    entries: tuple[tuple[str, "CellExpr", SourceLocation], ...]
    location: SourceLocation


@dataclass(frozen=True)
class CompExpr:
    n: int
    k: int
    m: int
    entries: tuple[tuple[str, "CellExpr", SourceLocation], ...] | None
    args: tuple["CellExpr", ...] | None  # binary sugar
    location: SourceLocation


@dataclass(frozen=True)
class UnaryExpr:
    op: str  # id | susp | homfactor
    arg: "CellExpr"
    location: SourceLocation


@dataclass(frozen=True)
class OpExpr:
    dims: tuple[int, ...]
    arg: "CellExpr"
    location: SourceLocation


CellExpr = Union[RefExpr, CohExpr, CompExpr, UnaryExpr, OpExpr]


@dataclass(frozen=True)
class GenDecl:
    name: str
    sphere: tuple[CellExpr, CellExpr] | None  # None for 0-generators (": *")
    location: SourceLocation


@dataclass(frozen=True)
class ComputadBlock:
    name: str
    decls: tuple[GenDecl, ...]
    location: SourceLocation


@dataclass(frozen=True)
class LetDecl:
    name: str
    expr: CellExpr
    location: SourceLocation


Declaration = Union[ComputadBlock, LetDecl]


@dataclass(frozen=True)
class SourceFile:
    items: tuple[Declaration, ...]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise SurfaceError(tok.location, f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return tok

    def at(self, text: str) -> bool:
        return self.peek().text == text

    # --- grammar ---

    def document(self) -> SourceFile:
        items: list[Declaration] = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.text == "computad":
                items.append(self.computad_block())
            elif tok.text == "let":
                items.append(self.let_decl())
            else:
                raise SurfaceError(tok.location, f"expected 'computad' or 'let', found {tok.text!r}")
        return SourceFile(tuple(items))

    def computad_block(self) -> ComputadBlock:
        loc = self.expect("computad").location
        name = self.ident("computad name")
        self.expect("{")
        decls: list[GenDecl] = []
        while not self.at("}"):
            decls.append(self.gen_decl())
            if self.at(";"):
                self.next()
            elif not self.at("}"):
                raise SurfaceError(self.peek().location, "expected ';' or '}' after a generator")
        self.expect("}")
        return ComputadBlock(name, tuple(decls), loc)

    def gen_decl(self) -> GenDecl:
        tok = self.peek()
        name = self.word("generator name")
        self.expect(":")
        if self.at("*"):
            self.next()
            return GenDecl(name, None, tok.location)
        src = self.cell_expr()
        self.expect("->")
        tgt = self.cell_expr()
        return GenDecl(name, (src, tgt), tok.location)

    def let_decl(self) -> LetDecl:
        loc = self.expect("let").location
        name = self.ident("cell name")
        self.expect("=")
        return LetDecl(name, self.cell_expr(), loc)

    def ident(self, what: str) -> str:
        tok = self.next()
        if tok.kind != "ident" or tok.text in KEYWORDS:
            raise SurfaceError(tok.location, f"expected {what}, found {tok.text or 'end of input'!r}")
        return tok.text

    def word(self, what: str) -> str:
        tok = self.next()
        if tok.kind not in ("ident", "name", "num", "pos") or tok.text in KEYWORDS:
            raise SurfaceError(tok.location, f"expected {what}, found {tok.text or 'end of input'!r}")
        return tok.text

    def cell_expr(self) -> CellExpr:
        tok = self.peek()
        if tok.text == "coh":
            return self.coh_expr()
        if tok.text == "comp":
            return self.comp_expr()
        if tok.text in ("id", "susp", "homfactor"):
            self.next()
            self.expect("(")
            arg = self.cell_expr()
            self.expect(")")
            return UnaryExpr(tok.text, arg, tok.location)
        if tok.text == "op":
            self.next()
            self.expect("{")
            dims = [self.number("a dimension")]
            while self.at(","):
                self.next()
                dims.append(self.number("a dimension"))
            self.expect("}")
            self.expect("(")
            arg = self.cell_expr()
            self.expect(")")
            return OpExpr(tuple(dims), arg, tok.location)
        if tok.kind in ("ident", "name", "num", "pos") and tok.text not in KEYWORDS:
            self.next()
            return RefExpr(tok.text, tok.location)
        raise SurfaceError(tok.location, f"expected a cell expression, found {tok.text or 'end of input'!r}")

    def coh_expr(self) -> CohExpr:
        loc = self.expect("coh").location
        tree = self.tree_literal()
        self.expect("{")
        src = self.cell_expr()
        self.expect("->")
        tgt = self.cell_expr()
        self.expect("}")
        entries = self.substitution_entries()
        if entries is None:
            raise SurfaceError(loc, "a coherence takes keyed entries or an empty '[]'")
        return CohExpr(tree, src, tgt, entries, loc)

    def comp_expr(self) -> CompExpr:
        loc = self.expect("comp").location
        self.expect("(")
        n = self.number("n")
        self.expect(",")
        k = self.number("k")
        self.expect(",")
        m = self.number("m")
        self.expect(")")
        self.expect("[")
        if self.at("]"):
            self.next()
            return CompExpr(n, k, m, (), None, loc)
        if self._entries_ahead():
            entries = self._entry_list()
            self.expect("]")
            return CompExpr(n, k, m, entries, None, loc)
        args = [self.cell_expr()]
        while self.at(","):
            self.next()
            args.append(self.cell_expr())
        self.expect("]")
        return CompExpr(n, k, m, None, tuple(args), loc)

    def number(self, what: str) -> int:
        tok = self.next()
        if tok.kind != "num":
            raise SurfaceError(tok.location, f"expected {what} (a number), found {tok.text!r}")
        return int(tok.text)

    def tree_literal(self) -> BataninTree:
        self.expect("[")
        children: list[BataninTree] = []
        if not self.at("]"):
            children.append(self.tree_literal())
            while self.at(","):
                self.next()
                children.append(self.tree_literal())
        self.expect("]")
        return BataninTree(tuple(children))

    def _entries_ahead(self) -> bool:
        return (
            self.peek().kind in ("ident", "name", "num", "pos")
            and self.peek(1).text == "=>"
        )

    def _entry_list(self) -> tuple[tuple[str, CellExpr, SourceLocation], ...]:
        entries = [self._entry()]
        while self.at(","):
            self.next()
            entries.append(self._entry())
        return tuple(entries)

    def _entry(self) -> tuple[str, CellExpr, SourceLocation]:
        tok = self.next()
        if tok.kind not in ("ident", "name", "num", "pos"):
            raise SurfaceError(tok.location, f"expected a position, found {tok.text!r}")
        self.expect("=>")
        return tok.text, self.cell_expr(), tok.location

    def substitution_entries(
        self,
    ) -> tuple[tuple[str, CellExpr, SourceLocation], ...] | None:
        self.expect("[")
        if self.at("]"):
            self.next()
            return ()
        if not self._entries_ahead():
            return None
        entries = self._entry_list()
        self.expect("]")
        return entries


def parse(text: str) -> SourceFile:
    return _Parser(tokenize(text)).document()


# ---------------------------------------------------------------------------
# elaboration


@dataclass(frozen=True)
class ElabCell:
    """An elaborated binding: the term plus the computad it lives over."""

    kind: str  # "cell" | "homcell"
    ambient: Computad
    term: CellTerm | HomCell
    over: str | None  # name of the source block, if the ambient is one


@dataclass
class ElabDocument:
    computads: list[tuple[str, Computad]] = field(default_factory=list)
    cells: list[tuple[str, ElabCell]] = field(default_factory=list)

    def computad(self, name: str) -> Computad:
        for n, c in self.computads:
            if n == name:
                return c
        raise KeyError(name)


def _position_scope(tree: BataninTree) -> dict[str, str]:
    """Names usable for positions of a scheme: canonical names plus the
    per-dimension letter aliases in canonical order."""
    scope: dict[str, str] = {}
    carrier = positions(tree).carrier
    for d in range(carrier.ndim + 1):
        level = sorted(carrier.cells_at(d), key=nat_key)
        for p in level:
            scope[p] = p
        for alias, p in zip(POSITION_ALIASES.get(d, ""), level):
            scope[alias] = p
    return scope


class Elaborator:
    def __init__(self) -> None:
        self.doc = ElabDocument()
        self.current: tuple[str, Computad] | None = None
        self.names: dict[str, ElabCell] = {}

    # --- document level ---

    def run(self, source: SourceFile) -> ElabDocument:
        for item in source.items:
            if isinstance(item, ComputadBlock):
                self.block(item)
            else:
                self.let(item)
        return self.doc

    def block(self, block: ComputadBlock) -> None:
        if any(n == block.name for n, _ in self.doc.computads):
            raise SurfaceError(block.location, f"computad {block.name!r} is already defined")
        gens: list[list[str]] = []
        attach: dict[str, Sphere] = {}
        partial = Computad.make([], {})
        for decl in block.decls:
            if partial.has_generator(decl.name):
                raise SurfaceError(decl.location, f"generator {decl.name!r} is already declared")
            if decl.sphere is None:
                d = 0
            else:
                src = self.cell(decl.sphere[0], partial)
                tgt = self.cell(decl.sphere[1], partial)
                if src.dim != tgt.dim:
                    raise SurfaceError(
                        decl.location,
                        f"boundary cells have dimensions {src.dim} and {tgt.dim}",
                    )
                d = src.dim + 1
                attach[decl.name] = Sphere(src, tgt)
            while len(gens) <= d:
                gens.append([])
            gens[d].append(decl.name)
            try:
                partial = Computad.make(gens, attach)
            except (ValueError, TypecheckError) as err:
                raise SurfaceError(decl.location, str(err)) from err
        self.doc.computads.append((block.name, partial))
        self.current = (block.name, partial)

    def let(self, decl: LetDecl) -> None:
        if decl.name in self.names or (
            self.current is not None and self.current[1].has_generator(decl.name)
        ):
            raise SurfaceError(decl.location, f"name {decl.name!r} is already defined")
        elab = self.elab(decl.expr)
        if elab.kind == "cell":
            try:
                typecheck_cell(elab.ambient, elab.term)
            except TypecheckError as err:
                raise SurfaceError(decl.location, str(err)) from err
        self.names[decl.name] = elab
        self.doc.cells.append((decl.name, elab))

    # --- expressions ---

    def elab(self, expr: CellExpr) -> ElabCell:
        """Elaborate a top-level expression to a term plus its ambient."""
        if isinstance(expr, UnaryExpr) and expr.op == "susp":
            inner = self._plain(expr.arg, expr.location)
            return ElabCell(
                "cell",
                suspend_computad(inner.ambient).computad,
                suspend_cell(inner.term),
                None,
            )
        if isinstance(expr, UnaryExpr) and expr.op == "homfactor":
            inner = self._plain(expr.arg, expr.location)
            if inner.term.dim < 1:
                raise SurfaceError(expr.location, "homfactor needs a cell of dimension >= 1")
            ends = boundary_at(inner.ambient, inner.term, 0)
            pointed = BipointedComputad(inner.ambient, (ends.src, ends.tgt))
            return ElabCell("homcell", inner.ambient, hom_factor(pointed, inner.term), inner.over)
        if isinstance(expr, OpExpr):
            inner = self._plain(expr.arg, expr.location)
            try:
                w = dimset(expr.dims)
            except ValueError as err:
                raise SurfaceError(expr.location, str(err)) from err
            return ElabCell("cell", op_computad(w, inner.ambient), op_cell(w, inner.term), None)
        ambient = self.current[1] if self.current else Computad.make([], {})
        over = self.current[0] if self.current else None
        term = self.cell(expr, ambient)
        if isinstance(expr, (CohExpr, CompExpr)) and _is_template(term):
            return ElabCell("cell", pasting_computad(term.tree), term, None)
        return ElabCell("cell", ambient, term, over)

    def _plain(self, expr: CellExpr, loc: SourceLocation) -> ElabCell:
        inner = self.elab(expr)
        if inner.kind != "cell":
            raise SurfaceError(loc, "hom cells cannot be transformed further")
        return inner

    def cell(self, expr: CellExpr, ambient: Computad) -> CellTerm:
        """Elaborate an expression to a cell over the given computad."""
        if isinstance(expr, RefExpr):
            if ambient.has_generator(expr.name):
                return ambient.var(expr.name)
            bound = self.names.get(expr.name)
            if bound is not None:
                if bound.kind != "cell":
                    raise SurfaceError(expr.location, f"{expr.name!r} is a hom cell")
                if bound.ambient != ambient:
                    raise SurfaceError(
                        expr.location, f"{expr.name!r} lives over a different computad"
                    )
                return bound.term
            raise SurfaceError(expr.location, f"unknown cell {expr.name!r}")
        if isinstance(expr, CohExpr):
            return self.coh(expr, ambient)
        if isinstance(expr, CompExpr):
            return self.comp(expr, ambient)
        if isinstance(expr, UnaryExpr) and expr.op == "id":
            inner = self.cell(expr.arg, ambient)
            return identity_cell(ambient, inner)
        if isinstance(expr, (UnaryExpr, OpExpr)):
            raise SurfaceError(
                expr.location,
                f"{getattr(expr, 'op', 'op')}(...) is only available at the top of a 'let'",
            )
        raise SurfaceError(expr.location, "expected a cell expression")

    def coh(self, expr: CohExpr, ambient: Computad) -> CellTerm:
        scope = _position_scope(expr.tree)
        pc = pasting_computad(expr.tree)
        src = self.position_cell(expr.src, expr.tree, scope, pc)
        tgt = self.position_cell(expr.tgt, expr.tree, scope, pc)
        sphere = self._mk_sphere(src, tgt, expr.location)
        if not expr.entries:
            return Coh(expr.tree, sphere, identity_sub(pc))
        sub = self.entries_sub(expr.entries, expr.tree, scope, ambient)
        return Coh(expr.tree, sphere, sub)

    def comp(self, expr: CompExpr, ambient: Computad) -> CellTerm:
        try:
            template = comp_cell(expr.n, expr.k, expr.m)
        except ValueError as err:
            raise SurfaceError(expr.location, str(err)) from err
        if expr.args is not None:
            if len(expr.args) != 2:
                raise SurfaceError(
                    expr.location, f"comp takes two cells, found {len(expr.args)}"
                )
            x = self.cell(expr.args[0], ambient)
            y = self.cell(expr.args[1], ambient)
            if (x.dim, y.dim) != (expr.n, expr.m):
                raise SurfaceError(
                    expr.location,
                    f"comp({expr.n},{expr.k},{expr.m}) applied to cells of "
                    f"dimensions {x.dim} and {y.dim}",
                )
            try:
                return compose(ambient, x, expr.k, y)
            except BoundaryMismatch as err:
                raise SurfaceError(expr.location, str(err)) from err
        if not expr.entries:
            return template
        scope = _position_scope(template.tree)
        sub = self.entries_sub(expr.entries, template.tree, scope, ambient)
        return Coh(template.tree, template.sphere, sub)

    def entries_sub(self, entries, tree, scope, ambient):
        assignment: dict[str, CellTerm] = {}
        for key, value_expr, loc in entries:
            p = scope.get(key)
            if p is None:
                raise SurfaceError(loc, f"{key!r} is not a position of the scheme")
            if p in assignment:
                raise SurfaceError(loc, f"position {p} is assigned twice")
            assignment[p] = self.cell(value_expr, ambient)
        missing = [
            p
            for _, p in positions(tree).carrier.all_cells()
            if p not in assignment
        ]
        if missing:
            raise SurfaceError(
                entries[0][2], f"substitution misses positions {sorted(missing, key=nat_key)}"
            )
        return substitution(assignment)

    def position_cell(self, expr, tree, scope, pc) -> CellTerm:
        """Elaborate a sphere-side expression, where identifiers refer to the
        positions of the scheme itself."""
        if isinstance(expr, RefExpr):
            p = scope.get(expr.name)
            if p is None:
                raise SurfaceError(
                    expr.location, f"{expr.name!r} is not a position of the scheme"
                )
            return Var(p, pos_dim(p))
        if isinstance(expr, CohExpr):
            inner_scope = _position_scope(expr.tree)
            inner_pc = pasting_computad(expr.tree)
            src = self.position_cell(expr.src, expr.tree, inner_scope, inner_pc)
            tgt = self.position_cell(expr.tgt, expr.tree, inner_scope, inner_pc)
            sphere = self._mk_sphere(src, tgt, expr.location)
            if not expr.entries:
                return Coh(expr.tree, sphere, identity_sub(inner_pc))
            assignment: dict[str, CellTerm] = {}
            for key, value_expr, loc in expr.entries:
                p = inner_scope.get(key)
                if p is None:
                    raise SurfaceError(loc, f"{key!r} is not a position of the scheme")
                assignment[p] = self.position_cell(value_expr, tree, scope, pc)
            return Coh(expr.tree, sphere, substitution(assignment))
        if isinstance(expr, UnaryExpr) and expr.op == "id":
            inner = self.position_cell(expr.arg, tree, scope, pc)
            return identity_cell(pc, inner)
        raise SurfaceError(
            expr.location, "only positions, coherences and id(...) may appear in a sphere"
        )

    @staticmethod
    def _mk_sphere(src: CellTerm, tgt: CellTerm, loc: SourceLocation) -> Sphere:
        try:
            return Sphere(src, tgt)
        except ValueError as err:
            raise SurfaceError(loc, str(err)) from err


def elaborate(source: SourceFile) -> ElabDocument:
    return Elaborator().run(source)


def load_document(text: str) -> ElabDocument:
    return elaborate(parse(text))


def _is_template(term: CellTerm) -> bool:
    """A coherence whose substitution is the identity on its own scheme."""
    return isinstance(term, Coh) and term.sub == identity_sub(pasting_computad(term.tree))


# ---------------------------------------------------------------------------
# printing (canonical)


def tree_text(tree: BataninTree) -> str:
    return "[" + ",".join(tree_text(c) for c in tree.children) + "]"


def cell_text(term: CellTerm | HomCell) -> str:
    if isinstance(term, Var):
        return term.name
    if isinstance(term, HomGenerator):
        return f"homgen({cell_text(term.underlying)})"
    sphere = f"{cell_text(term.sphere.src)} -> {cell_text(term.sphere.tgt)}"
    if term.sub == identity_sub(pasting_computad(term.tree)):
        entries = "[]"
    else:
        entries = "[" + ", ".join(f"{p} => {cell_text(v)}" for p, v in term.sub) + "]"
    return f"coh {tree_text(term.tree)} {{ {sphere} }} {entries}"


def computad_text(name: str, c: Computad) -> str:
    lines = [f"computad {name} {{"]
    for d in range(c.bound + 1):
        for v in c.generators_at(d):
            if d == 0:
                lines.append(f"  {v} : * ;")
            else:
                sphere = c.sphere_of(v)
                lines.append(f"  {v} : {cell_text(sphere.src)} -> {cell_text(sphere.tgt)} ;")
    lines.append("}")
    return "\n".join(lines)


def document_text(doc: ElabDocument) -> str:
    chunks: list[str] = []
    for name, computad in doc.computads:
        chunks.append(computad_text(name, computad))
    for name, elab in doc.cells:
        chunks.append(f"let {name} = {cell_text(elab.term)}")
    return "\n\n".join(chunks) + "\n"
