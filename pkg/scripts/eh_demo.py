#!/usr/bin/env python3
"""Walk through the scalar-swap story on the two-scalar computad.

Builds the computad with two 2-cells a, b : id(x) -> id(x), composes them
horizontally and vertically, factors the vertical composite through the hom
computad at (x, x), and checks the two reversal identities that make the
classical interchange argument go through:

    op1(comp0(a, b)) = comp0(b, a)
    op2(comp1(a, b)) = comp1(b, a)

Everything printed is canonical surface syntax; feed it back to the CLI if
you want to keep manipulating the output.
"""

from __future__ import annotations

from omegatt.computads import Var
from omegatt.globular import dimset
from omegatt.homcat import hom_factor, hom_realize, is_indecomposable
from omegatt.metaops import BipointedComputad, op_cell, rename_cell
from omegatt.oplib import compose, eh_computad, identity_cell
from omegatt.surface import cell_text, computad_text


def main() -> None:
    pointed = eh_computad()
    c = pointed.computad
    print(computad_text("eh", c))
    print()

    a, b = Var("a", 2), Var("b", 2)
    horizontal = compose(c, a, 0, b)
    vertical = compose(c, a, 1, b)
    print(f"horizontal = {cell_text(horizontal)}")
    print(f"vertical   = {cell_text(vertical)}")
    print()

    swap = {"a": "b", "b": "a"}
    assert op_cell(dimset([1]), horizontal) == rename_cell(swap, horizontal)
    print("op{1}(comp(2,0,2)[a, b]) == comp(2,0,2)[b, a]")
    assert op_cell(dimset([2]), vertical) == rename_cell(swap, vertical)
    print("op{2}(comp(2,1,2)[a, b]) == comp(2,1,2)[b, a]")
    print()

    loops = BipointedComputad(c, (Var("x", 0), Var("x", 0)))
    factored = hom_factor(loops, vertical)
    print(f"hom factorisation of vertical: {cell_text(factored)}")
    assert hom_realize(loops, factored) == vertical
    print("realize(factor(vertical)) == vertical")
    print(f"is_indecomposable(id(x)): {is_indecomposable(loops, identity_cell(c, Var('x', 0)))}")
    print(f"is_indecomposable(vertical): {is_indecomposable(loops, vertical)}")
    # horizontal stays indecomposable: a 0-composite is not a suspension shape,
    # so nothing above the basepoints witnesses a decomposition in the hom
    print(f"is_indecomposable(horizontal): {is_indecomposable(loops, horizontal)}")


if __name__ == "__main__":
    main()
