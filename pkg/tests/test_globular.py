"""Globular sets: construction, disks, wedge, suspension, hom, opposites."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dimsets, trees
from omegatt.globular import (
    BipointedGlobularSet,
    FiniteGlobularSet,
    disk,
    glob_from_json,
    hom_glob,
    op_glob,
    op_glob_bipointed,
    suspend_glob,
    wedge,
)
from omegatt.trees import positions


def point(name: str = "p") -> FiniteGlobularSet:
    return FiniteGlobularSet.make([[name]], {}, {})


EMPTY = FiniteGlobularSet.make([], {}, {})


class TestMake:
    def test_rejects_duplicate_names_across_dimensions(self):
        with pytest.raises(ValueError, match="duplicate"):
            FiniteGlobularSet.make([["x"], ["x"]], {"x": "x"}, {"x": "x"})

    def test_rejects_dangling_boundary(self):
        with pytest.raises(ValueError, match="dangling"):
            FiniteGlobularSet.make([["a"], ["f"]], {"f": "a"}, {"f": "b"})

    def test_rejects_globularity_failure(self):
        # two parallel arrows, then a 2-cell between non-parallel ones
        with pytest.raises(ValueError, match="globularity"):
            FiniteGlobularSet.make(
                [["a", "b", "c"], ["f", "g"], ["m"]],
                {"f": "a", "g": "b", "m": "f"},
                {"f": "b", "g": "c", "m": "g"},
            )

    def test_trailing_empty_dimensions_dropped(self):
        g = FiniteGlobularSet.make([["a"], []], {}, {})
        assert g.ndim == 0


class TestDisk:
    def test_disk0(self):
        assert disk(0).cells == (("top",),)

    def test_disk2_counts(self):
        assert tuple(len(level) for level in disk(2).cells) == (2, 2, 1)

    def test_disk3_matches_positions_of_linear_tree_up_to_rename(self):
        # rename positions of the height-3 linear tree to disk names
        from omegatt.trees import disk_tree

        p = positions(disk_tree(3)).carrier
        rename = {"0": "s0", "1": "t0", "1.0": "s1", "1.1": "t1",
                  "1.1.0": "s2", "1.1.1": "t2", "1.1.1.0": "top"}
        cells = [[rename[c] for c in level] for level in p.cells]
        src = {rename[c]: rename[p.src_of(d, c)]
               for d in range(1, p.ndim + 1) for c in p.cells_at(d)}
        tgt = {rename[c]: rename[p.tgt_of(d, c)]
               for d in range(1, p.ndim + 1) for c in p.cells_at(d)}
        assert FiniteGlobularSet.make(cells, src, tgt) == disk(3)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            disk(-1)


class TestWedge:
    def test_empty_wedge_is_doubly_pointed_point(self):
        assert wedge([]) == BipointedGlobularSet(disk(0), ("top", "top"))

    def test_single_part_unchanged(self):
        x = suspend_glob(disk(1))
        assert wedge([x]) == x

    def test_two_suspended_points_is_a_path(self):
        arrow = suspend_glob(point())
        w = wedge([arrow, arrow])
        assert w.carrier.cells == (("0", "1", "2"), ("1.1.p", "2.1.p"))
        assert w.base == ("0", "2")
        assert w.carrier.src_of(1, "1.1.p") == "0"
        assert w.carrier.tgt_of(1, "1.1.p") == "1"
        assert w.carrier.src_of(1, "2.1.p") == "1"
        assert w.carrier.tgt_of(1, "2.1.p") == "2"

    def test_loop_part_merges_chain_nodes(self):
        loop = BipointedGlobularSet(point(), ("p", "p"))
        w = wedge([loop, suspend_glob(point())])
        # part 1 glues nodes 0 and 1, so the chain collapses to 0 -- 2
        assert w.carrier.cells_at(0) == ("0", "2")
        assert w.base == ("0", "2")


class TestSuspend:
    def test_suspend_empty(self):
        s = suspend_glob(EMPTY)
        assert s.carrier.cells == (("0", "1"),)
        assert s.base == ("0", "1")

    def test_suspend_point_is_an_arrow(self):
        s = suspend_glob(point())
        assert s.carrier.cells == (("0", "1"), ("1.p",))
        assert s.carrier.src_of(1, "1.p") == "0"
        assert s.carrier.tgt_of(1, "1.p") == "1"

    @given(st.integers(min_value=0, max_value=4))
    def test_suspend_disk_counts(self, n):
        s = suspend_glob(disk(n)).carrier
        assert len(s.cells_at(0)) == 2
        for d in range(n + 1):
            assert len(s.cells_at(d + 1)) == len(disk(n).cells_at(d))


class TestHom:
    @given(trees(5))
    def test_hom_after_suspend_is_identity(self, t):
        x = positions(t).carrier
        assert hom_glob(suspend_glob(x)) == x

    def test_hom_of_arrow_pointed_forward(self):
        x = BipointedGlobularSet(disk(1), ("s0", "t0"))
        assert hom_glob(x).cells == (("top",),)

    def test_hom_of_arrow_pointed_backward_is_empty(self):
        x = BipointedGlobularSet(disk(1), ("t0", "s0"))
        assert hom_glob(x) == EMPTY


class TestOp:
    @given(trees(5))
    def test_op_empty_is_identity(self, t):
        x = positions(t).carrier
        assert op_glob(frozenset(), x) == x

    def test_op1_disk1_swaps_endpoints(self):
        g = op_glob(frozenset({1}), disk(1))
        assert g.src_of(1, "top") == "t0"
        assert g.tgt_of(1, "top") == "s0"

    @given(trees(4), dimsets(3), dimsets(3))
    def test_op_composes_by_symmetric_difference(self, t, w, v):
        x = positions(t).carrier
        assert op_glob(w, op_glob(v, x)) == op_glob(w ^ v, x)

    @given(trees(4), dimsets(3))
    def test_op_is_involutive(self, t, w):
        x = positions(t)
        assert op_glob_bipointed(w, op_glob_bipointed(w, x)) == x


class TestJson:
    @given(trees(5))
    def test_round_trip(self, t):
        x = positions(t)
        assert glob_from_json(x.to_json()) == x
        assert glob_from_json(x.carrier.to_json()) == x.carrier

    def test_field_shape(self):
        obj = suspend_glob(point()).to_json()
        assert list(obj) == ["dims", "src", "tgt", "base"]
        assert obj["dims"] == [["0", "1"], ["1.p"]]
        assert obj["src"] == {"1.p": "0"}
        assert obj["base"] == ["0", "1"]
