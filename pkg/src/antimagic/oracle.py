"""Exact backtracking search for (strongly) antimagic labelings of small trees.

Independent of the constructive labelers: this is the ground truth the
constructions are checked against on small instances.  Labels are placed in
descending order m, m-1, ...; at each level every still-unlabeled edge is a
branch, tried most-constrained-vertex first, and a branch is cut as soon as
two finished vertices tie or break the degree ordering.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .labeling import vertex_sums
from .trees import Edge, Tree


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = 10
    node_limit: int | None = None
    time_limit: float | None = None  # seconds


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "none" | "exhausted"
    labels: dict[Edge, int] | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def proven_absent(self) -> bool:
        return self.status == "none"


class _BudgetExceeded(Exception):
    pass


def find_strongly_antimagic(tree: Tree, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """A witness labeling, a completed-search "none", or budget exhaustion."""
    return _search(tree, budget, strong=True)


def find_antimagic(tree: Tree, budget: SearchBudget = SearchBudget()) -> SearchResult:
    return _search(tree, budget, strong=False)


def _search(tree: Tree, budget: SearchBudget, strong: bool) -> SearchResult:
    m = len(tree.edges)
    if m > budget.max_edges:
        raise ValueError(f"tree has {m} edges, over the {budget.max_edges}-edge budget")
    if m == 0:
        return SearchResult("none", None, 0)

    edges = sorted(tree.edges)
    degree = {v: tree.degree(v) for v in tree.vertices}
    incident: dict[str, list[Edge]] = {v: [] for v in tree.vertices}
    for e in edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)

    assigned: dict[Edge, int] = {}
    partial = {v: 0 for v in tree.vertices}
    unlabeled = dict(degree)
    finished: list[str] = []
    nodes = 0
    deadline = time.monotonic() + budget.time_limit if budget.time_limit else None

    def consistent(v: str) -> bool:
        sv, dv = partial[v], degree[v]
        for u in finished:
            if u == v:
                continue
            su, du = partial[u], degree[u]
            if su == sv:
                return False
            if strong and ((du < dv and su > sv) or (dv < du and sv > su)):
                return False
        return True

    def bounds_hold(top: int) -> bool:
        # Labels 1..top are still unplaced; an unfinished vertex with k open
        # slots can gain between 1+...+k and top+...+(top-k+1) more.
        for v in tree.vertices:
            k = unlabeled[v]
            if k == 0:
                continue
            lb = partial[v] + k * (k + 1) // 2
            ub = partial[v] + k * top - k * (k - 1) // 2
            dv = degree[v]
            for u in finished:
                su, du = partial[u], degree[u]
                if strong and du < dv and ub <= su:
                    return False
                if strong and dv < du and lb >= su:
                    return False
                if lb == ub == su:
                    return False
        return True

    def place(label: int) -> bool:
        nonlocal nodes
        if label == 0:
            return True
        candidates = sorted(
            (e for e in edges if e not in assigned),
            key=lambda e: (min(unlabeled[e[0]], unlabeled[e[1]]), e),
        )
        for e in candidates:
            nodes += 1
            if budget.node_limit is not None and nodes > budget.node_limit:
                raise _BudgetExceeded
            if deadline is not None and time.monotonic() > deadline:
                raise _BudgetExceeded
            assigned[e] = label
            newly = []
            for v in e[:2]:
                partial[v] += label
                unlabeled[v] -= 1
                if unlabeled[v] == 0:
                    newly.append(v)
            ok = True
            for v in newly:
                finished.append(v)
                if not consistent(v):
                    ok = False
                    break
            if ok and bounds_hold(label - 1) and place(label - 1):
                return True
            for v in reversed(newly):
                if finished and finished[-1] == v:
                    finished.pop()
            del assigned[e]
            for v in e[:2]:
                partial[v] -= label
                unlabeled[v] += 1
        return False

    try:
        found = place(m)
    except _BudgetExceeded:
        return SearchResult("exhausted", None, nodes)

    if not found:
        return SearchResult("none", None, nodes)
    witness = dict(assigned)
    report = vertex_sums(tree, witness)
    assert report.antimagic_ok and (not strong or report.strong_ok)
    return SearchResult("found", witness, nodes)
