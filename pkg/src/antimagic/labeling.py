"""Edge labelings, vertex sums, and the antimagic / strongly antimagic checks.

A labeling assigns the integers 1..m bijectively to the m edges of a tree.
The vertex sum at u is the sum of labels on edges incident to u.  A labeling
is antimagic when all vertex sums are pairwise distinct, and strongly
antimagic when additionally deg(u) < deg(v) implies sum(u) < sum(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .spiders import EdgeAddress, SpiderTree
from .trees import Edge, Tree, edge_key


class LabelingError(ValueError):
    """A labeling is structurally unusable (wrong keys, missing edges, ...)."""


@dataclass(frozen=True)
class EdgeLabeling:
    """Address-keyed labeling of a double spider's edges."""

    total_edges: int
    assignment: dict[EdgeAddress, int]

    def labels_on(self, spider: SpiderTree) -> dict[Edge, int]:
        """Resolve addresses against a materialized instance."""
        out: dict[Edge, int] = {}
        for addr, label in self.assignment.items():
            edge = spider.edge_of.get(addr)
            if edge is None:
                raise LabelingError(f"address {addr} does not exist in the instance")
            out[edge] = label
        return out


@dataclass(frozen=True)
class SumViolation:
    """First offending vertex pair under the deterministic (degree, id) order."""

    vertex_a: str
    vertex_b: str
    sum_a: int
    sum_b: int
    degree_a: int
    degree_b: int
    reason: str  # "duplicate-sum" | "degree-order" | "bad-bijection"

    def describe(self) -> str:
        if self.reason == "bad-bijection":
            return "labels are not a bijection onto 1..m"
        return (
            f"{self.reason}: phi({self.vertex_a})={self.sum_a} (deg {self.degree_a}) vs "
            f"phi({self.vertex_b})={self.sum_b} (deg {self.degree_b})"
        )


@dataclass(frozen=True)
class VertexSumReport:
    sums: dict[str, int]
    degree_classes: dict[int, tuple[str, ...]]
    bijection_ok: bool
    antimagic_ok: bool
    strong_ok: bool
    violation: SumViolation | None


def _resolve(tree: Tree | SpiderTree, labeling) -> tuple[Tree, dict[Edge, int], int]:
    if isinstance(tree, SpiderTree):
        base = tree.tree
        if isinstance(labeling, EdgeLabeling):
            return base, labeling.labels_on(tree), labeling.total_edges
    else:
        base = tree
        if isinstance(labeling, EdgeLabeling):
            raise LabelingError("address-keyed labeling needs a materialized instance")
    labels = {edge_key(u, v): lab for (u, v), lab in labeling.items()}
    return base, labels, len(labels)


def vertex_sums(tree: Tree | SpiderTree, labeling) -> VertexSumReport:
    """Compute per-vertex label sums plus all property flags.

    Raises LabelingError when the labeled edge set differs from the tree's.
    """
    base, labels, m = _resolve(tree, labeling)
    if set(labels) != set(base.edges):
        raise LabelingError("labeling does not cover exactly the tree's edges")

    sums = {v: 0 for v in base.vertices}
    for (u, v), lab in labels.items():
        sums[u] += lab
        sums[v] += lab

    bijection_ok = sorted(labels.values()) == list(range(1, m + 1))
    if bijection_ok:
        assert sum(sums.values()) == m * (m + 1)

    classes: dict[int, list[str]] = {}
    for v in base.vertices:
        classes.setdefault(base.degree(v), []).append(v)
    degree_classes = {k: tuple(sorted(vs)) for k, vs in sorted(classes.items())}

    violation = None
    antimagic_ok = strong_ok = bijection_ok
    if not bijection_ok:
        violation = SumViolation("", "", 0, 0, 0, 0, "bad-bijection")
    else:
        order = sorted(base.vertices, key=lambda v: (base.degree(v), v))
        for idx, u in enumerate(order):
            for v in order[idx + 1:]:
                du, dv = base.degree(u), base.degree(v)
                if sums[u] == sums[v]:
                    violation = SumViolation(u, v, sums[u], sums[v], du, dv, "duplicate-sum")
                    antimagic_ok = strong_ok = False
                elif du < dv and sums[u] > sums[v]:
                    violation = SumViolation(u, v, sums[u], sums[v], du, dv, "degree-order")
                    strong_ok = False
                if violation is not None:
                    break
            if violation is not None:
                break

    return VertexSumReport(
        sums=sums,
        degree_classes=degree_classes,
        bijection_ok=bijection_ok,
        antimagic_ok=antimagic_ok,
        strong_ok=strong_ok,
        violation=violation,
    )


def verify_bijection(labeling: EdgeLabeling | Mapping) -> bool:
    """True iff the labels are exactly {1..m} with no repeats."""
    if isinstance(labeling, EdgeLabeling):
        values, m = labeling.assignment.values(), labeling.total_edges
    else:
        values, m = labeling.values(), len(labeling)
    return sorted(values) == list(range(1, m + 1))


def verify_antimagic(tree: Tree | SpiderTree, labeling) -> bool:
    """True iff all vertex sums are pairwise distinct.

    Bijection failure is reported distinctly (LabelingError) rather than as
    a False result.
    """
    report = vertex_sums(tree, labeling)
    if not report.bijection_ok:
        raise LabelingError("labels are not a bijection onto 1..m")
    return report.antimagic_ok


def verify_strongly_antimagic(tree: Tree | SpiderTree, labeling) -> VertexSumReport:
    """Full report; strong_ok is the strongly antimagic verdict."""
    return vertex_sums(tree, labeling)


# ---------------------------------------------------------------------------
# Labeled trees (construction and composition results)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledTree:
    """A tree with a verified labeling; spider context kept when available."""

    tree: Tree
    labels: dict[Edge, int]
    report: VertexSumReport
    spider: SpiderTree | None = None
    labeling: EdgeLabeling | None = None

    @property
    def total_edges(self) -> int:
        return len(self.labels)


def labeled_tree(tree: Tree, labels: Mapping[Edge, int]) -> LabeledTree:
    labels = {edge_key(u, v): lab for (u, v), lab in labels.items()}
    return LabeledTree(tree=tree, labels=labels, report=vertex_sums(tree, labels))


def labeled_spider(spider: SpiderTree, labeling: EdgeLabeling) -> LabeledTree:
    labels = labeling.labels_on(spider)
    return LabeledTree(
        tree=spider.tree,
        labels=labels,
        report=vertex_sums(spider.tree, labels),
        spider=spider,
        labeling=labeling,
    )
