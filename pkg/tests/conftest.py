"""Shared hypothesis strategies for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from omegatt.globular import dimset
from omegatt.trees import BataninTree, all_trees


def trees(max_nodes: int = 5) -> st.SearchStrategy[BataninTree]:
    return st.sampled_from(list(all_trees(max_nodes)))


def dimsets(max_dim: int = 3) -> st.SearchStrategy[frozenset[int]]:
    return st.frozensets(st.integers(min_value=1, max_value=max_dim)).map(dimset)
