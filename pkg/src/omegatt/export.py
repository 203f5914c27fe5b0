"""Export elaborated documents to JSON and Graphviz DOT.

The JSON form round-trips (:func:`document_from_json`); the DOT form is a
one-way rendering with one ``digraph`` per computad and dimension: the
``d``-th layer draws the ``d``-generators as edges between their printed
``(d-1)``-boundary cells.  Bound cells only appear in the JSON form.
"""

from __future__ import annotations

from typing import Mapping

from .computads import (
    Computad,
    cell_from_json,
    cell_to_json,
    computad_from_json,
    computad_to_json,
)
from .computads import pasting_computad
from .homcat import homcell_from_json, homcell_to_json
from .surface import ElabCell, ElabDocument, _is_template, cell_text
from .trees import pos_dim


def document_to_json(doc: ElabDocument) -> dict:
    computads = [{"name": name, **computad_to_json(c)} for name, c in doc.computads]
    cells = []
    for name, elab in doc.cells:
        term = (
            homcell_to_json(elab.term)
            if elab.kind == "homcell"
            else cell_to_json(elab.term)
        )
        cells.append({"name": name, "over": elab.over, "kind": elab.kind, "term": term})
    return {"computads": computads, "cells": cells}


def document_from_json(obj: Mapping) -> ElabDocument:
    doc = ElabDocument()
    for entry in obj.get("computads", []):
        doc.computads.append((entry["name"], computad_from_json(entry)))
    for entry in obj.get("cells", []):
        over = entry.get("over")
        ambient = doc.computad(over) if over is not None else Computad.make([], {})

        def dim_of(name: str, c: Computad = ambient) -> int:
            return c.dim_of(name) if c.has_generator(name) else pos_dim(name)

        decode = homcell_from_json if entry["kind"] == "homcell" else cell_from_json
        term = decode(entry["term"], dim_of)
        if entry["kind"] == "cell" and over is None and _is_template(term):
            ambient = pasting_computad(term.tree)
        doc.cells.append(
            (entry["name"], ElabCell(entry["kind"], ambient, term, over))
        )
    return doc


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _layer_dot(name: str, c: Computad, d: int) -> str:
    lines = [f"digraph {_quote(f'{name}_dim{d}')} {{"]
    nodes: list[str] = []

    def node(text: str) -> None:
        if text not in nodes:
            nodes.append(text)

    for v in c.generators_at(d - 1):
        node(cell_text(c.var(v)))
    edges = []
    for v in c.generators_at(d):
        sphere = c.sphere_of(v)
        src, tgt = cell_text(sphere.src), cell_text(sphere.tgt)
        node(src)
        node(tgt)
        edges.append(f"  {_quote(src)} -> {_quote(tgt)} [label={_quote(v)}];")
    lines.extend(f"  {_quote(text)};" for text in nodes)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines)


def computad_dot(name: str, c: Computad) -> str:
    layers = [_layer_dot(name, c, d) for d in range(1, max(c.bound, 1) + 1)]
    return "\n\n".join(layers)


def document_to_dot(doc: ElabDocument) -> str:
    chunks = [computad_dot(name, c) for name, c in doc.computads]
    return "\n\n".join(chunks) + "\n"
