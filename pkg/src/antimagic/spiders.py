"""Double spider instances and their structural machinery.

A double spider is a tree with exactly two vertices of degree >= 3 (the hubs
vl and vr), joined by a core path of length s, with a multiset of pendant
paths hanging off each hub.  This module owns validation, the canonical
orientation, the derived counting parameters, edge addressing, tree
materialization, case classification, and exhaustive enumeration by edge
budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .trees import Edge, Tree, edge_key, make_tree


class InvalidSpider(ValueError):
    """The given data does not describe a double spider."""


def _lengths(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(int(v) for v in values))


@dataclass(frozen=True)
class DoubleSpiderSpec:
    """Raw instance: core length plus the two pendant-path length multisets."""

    core_length: int
    left_lengths: tuple[int, ...]
    right_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "left_lengths", _lengths(self.left_lengths))
        object.__setattr__(self, "right_lengths", _lengths(self.right_lengths))
        if self.core_length < 1:
            raise InvalidSpider("core length must be >= 1")
        for side, lengths in (("left", self.left_lengths), ("right", self.right_lengths)):
            if len(lengths) < 2:
                raise InvalidSpider(f"{side} side needs at least 2 paths (hub degree >= 3)")
            if any(l < 1 for l in lengths):
                raise InvalidSpider(f"{side} side has a non-positive path length")

    @property
    def total_edges(self) -> int:
        return self.core_length + sum(self.left_lengths) + sum(self.right_lengths)


@dataclass(frozen=True)
class CanonicalDoubleSpider:
    """Oriented instance: the left hub carries at least as many paths.

    Lengths are stored ascending on both sides.  Instances coming out of
    canonicalize() and enumerate_instances() additionally satisfy the
    equal-count tie-break (the side holding more copies of the globally
    minimum path length is the right one, remaining ties to the side with
    the lexicographically smaller length sequence); composition moves may
    legitimately build equal-count instances in their construction order.
    """

    core_length: int
    left_lengths: tuple[int, ...]
    right_lengths: tuple[int, ...]
    swapped: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "left_lengths", _lengths(self.left_lengths))
        object.__setattr__(self, "right_lengths", _lengths(self.right_lengths))
        if self.core_length < 1:
            raise InvalidSpider("core length must be >= 1")
        for lengths in (self.left_lengths, self.right_lengths):
            if len(lengths) < 2 or any(l < 1 for l in lengths):
                raise InvalidSpider("each side needs >= 2 paths of positive length")
        if len(self.left_lengths) < len(self.right_lengths):
            raise InvalidSpider("the left hub must carry at least as many paths")

    @property
    def total_edges(self) -> int:
        return self.core_length + sum(self.left_lengths) + sum(self.right_lengths)

    @property
    def sort_key(self) -> tuple:
        return (self.total_edges, self.core_length, self.right_lengths, self.left_lengths)

    def as_spec(self) -> DoubleSpiderSpec:
        return DoubleSpiderSpec(self.core_length, self.left_lengths, self.right_lengths)


def _oriented_ok(left: tuple[int, ...], right: tuple[int, ...]) -> bool:
    if len(left) != len(right):
        return len(left) > len(right)
    gmin = min(left[0], right[0])
    copies_l, copies_r = left.count(gmin), right.count(gmin)
    if copies_l != copies_r:
        return copies_r > copies_l
    return right <= left


def canonicalize(spec: DoubleSpiderSpec | CanonicalDoubleSpider) -> CanonicalDoubleSpider:
    """Apply the orientation rule; idempotent on already-canonical instances."""
    if isinstance(spec, CanonicalDoubleSpider):
        return spec
    left, right = spec.left_lengths, spec.right_lengths
    if _oriented_ok(left, right):
        return CanonicalDoubleSpider(spec.core_length, left, right, swapped=False)
    return CanonicalDoubleSpider(spec.core_length, right, left, swapped=True)


def oriented(core_length: int, left: Iterable[int], right: Iterable[int]) -> CanonicalDoubleSpider:
    """Build an instance whose sides are known to already be oriented correctly.

    Used by the reduction machinery, where every intermediate instance keeps
    the canonical orientation; a flip here would be a bug, not an input error.
    """
    c = CanonicalDoubleSpider(core_length, tuple(left), tuple(right))
    return c


# ---------------------------------------------------------------------------
# Derived parameters
# ---------------------------------------------------------------------------


def _prefix(values: Iterable[int]) -> tuple[int, ...]:
    out = [0]
    for v in values:
        out.append(out[-1] + v)
    return tuple(out)


@dataclass(frozen=True)
class Parameters:
    """Counting parameters of a canonical instance.

    Right side: a odd paths of lengths 2x_i+1 and b even paths of lengths
    2y_i.  Left side: c odd paths of lengths 2w_i+1 with w_i >= 1, d even
    paths of lengths 2z_i, and t unit paths.  Prefix tuples are indexed so
    that e.g. A_odd[i] = sum_{k<=i} (x_k + 1), with A_odd[0] = 0.
    """

    a: int
    b: int
    c: int
    d: int
    t: int
    s: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    w: tuple[int, ...]
    z: tuple[int, ...]
    A_odd: tuple[int, ...]
    A_even: tuple[int, ...]
    B: tuple[int, ...]
    C_odd: tuple[int, ...]
    C_even: tuple[int, ...]
    D: tuple[int, ...]
    m: int
    deg_vl: int
    deg_vr: int

    @property
    def A_all(self) -> int:
        return self.A_odd[self.a] + self.A_even[self.a]

    @property
    def B_all(self) -> int:
        return 2 * self.B[self.b]

    @property
    def C_all(self) -> int:
        return self.C_odd[self.c] + self.C_even[self.c]

    @property
    def D_all(self) -> int:
        return 2 * self.D[self.d]

    @property
    def s1(self) -> int:
        return abs(self.s - 2) // 2

    @property
    def s2(self) -> int:
        return 1 if self.s == 1 or self.s % 2 == 0 else 2


def derive_parameters(c: CanonicalDoubleSpider) -> Parameters:
    """Split both sides into parity classes and precompute all prefix sums."""
    x = tuple((l - 1) // 2 for l in c.right_lengths if l % 2 == 1)
    y = tuple(l // 2 for l in c.right_lengths if l % 2 == 0)
    t = sum(1 for l in c.left_lengths if l == 1)
    w = tuple((l - 1) // 2 for l in c.left_lengths if l % 2 == 1 and l > 1)
    z = tuple(l // 2 for l in c.left_lengths if l % 2 == 0)
    s = c.core_length
    p = Parameters(
        a=len(x), b=len(y), c=len(w), d=len(z), t=t, s=s,
        x=x, y=y, w=w, z=z,
        A_odd=_prefix(xi + 1 for xi in x),
        A_even=_prefix(x),
        B=_prefix(y),
        C_odd=_prefix(wi + 1 for wi in w),
        C_even=_prefix(w),
        D=_prefix(z),
        m=c.total_edges,
        deg_vl=len(c.left_lengths) + 1,
        deg_vr=len(c.right_lengths) + 1,
    )
    assert all(wi >= 1 for wi in w)
    assert p.m == p.A_all + p.B_all + s + p.C_all + p.D_all + t
    return p


# ---------------------------------------------------------------------------
# Edge addressing
# ---------------------------------------------------------------------------

KIND_CORE = "core"
KIND_R_ODD = "R/odd"
KIND_R_EVEN = "R/even"
KIND_L_ODD = "L/odd"
KIND_L_EVEN = "L/even"
KIND_L_UNIT = "L/unit"

_KIND_RANK = {
    KIND_CORE: 0,
    KIND_R_ODD: 1,
    KIND_R_EVEN: 2,
    KIND_L_ODD: 3,
    KIND_L_EVEN: 4,
    KIND_L_UNIT: 5,
}


@dataclass(frozen=True)
class EdgeAddress:
    """Position of an edge in a canonical instance.

    Core edges carry only j (1..s).  Path edges carry the path index i within
    their parity class and the position j along the path; on right paths j
    grows away from vr (the pendant edge has maximal j), on left paths the
    pendant edge has j = 1.  Unit left paths carry only i.
    """

    kind: str
    i: int = 0
    j: int = 0

    @staticmethod
    def core(j: int) -> "EdgeAddress":
        return EdgeAddress(KIND_CORE, 0, j)

    @staticmethod
    def r_odd(i: int, j: int) -> "EdgeAddress":
        return EdgeAddress(KIND_R_ODD, i, j)

    @staticmethod
    def r_even(i: int, j: int) -> "EdgeAddress":
        return EdgeAddress(KIND_R_EVEN, i, j)

    @staticmethod
    def l_odd(i: int, j: int) -> "EdgeAddress":
        return EdgeAddress(KIND_L_ODD, i, j)

    @staticmethod
    def l_even(i: int, j: int) -> "EdgeAddress":
        return EdgeAddress(KIND_L_EVEN, i, j)

    @staticmethod
    def l_unit(i: int) -> "EdgeAddress":
        return EdgeAddress(KIND_L_UNIT, i, 0)

    @property
    def text(self) -> str:
        if self.kind == KIND_CORE:
            return f"core/{self.j}"
        if self.kind == KIND_L_UNIT:
            return f"L/unit/{self.i}"
        return f"{self.kind}/{self.i}/{self.j}"

    def __str__(self) -> str:
        return self.text


def address_sort_key(addr: EdgeAddress) -> tuple[int, int, int]:
    return (_KIND_RANK[addr.kind], addr.i, addr.j)


def parse_address(text: str) -> EdgeAddress:
    """Parse the `core/<j>`, `R/odd/<i>/<j>`, ..., `L/unit/<i>` grammar."""
    parts = [p.strip() for p in text.strip().split("/")]
    try:
        if parts[0] == "core" and len(parts) == 2:
            return EdgeAddress.core(int(parts[1]))
        kind = "/".join(parts[:2])
        if kind == KIND_L_UNIT and len(parts) == 3:
            return EdgeAddress.l_unit(int(parts[2]))
        if kind in (KIND_R_ODD, KIND_R_EVEN, KIND_L_ODD, KIND_L_EVEN) and len(parts) == 4:
            return EdgeAddress(kind, int(parts[2]), int(parts[3]))
    except ValueError:
        pass
    raise ValueError(f"bad edge address: {text!r}")


def all_addresses(p: Parameters) -> list[EdgeAddress]:
    """Every in-range address of an instance, in canonical order."""
    out = [EdgeAddress.core(j) for j in range(1, p.s + 1)]
    for i, xi in enumerate(p.x, start=1):
        out.extend(EdgeAddress.r_odd(i, j) for j in range(1, 2 * xi + 2))
    for i, yi in enumerate(p.y, start=1):
        out.extend(EdgeAddress.r_even(i, j) for j in range(1, 2 * yi + 1))
    for i, wi in enumerate(p.w, start=1):
        out.extend(EdgeAddress.l_odd(i, j) for j in range(1, 2 * wi + 2))
    for i, zi in enumerate(p.z, start=1):
        out.extend(EdgeAddress.l_even(i, j) for j in range(1, 2 * zi + 1))
    out.extend(EdgeAddress.l_unit(i) for i in range(1, p.t + 1))
    return out


def pendant_addresses(p: Parameters) -> list[EdgeAddress]:
    """Addresses of the pendant (leaf-incident) edges."""
    out = []
    out.extend(EdgeAddress.r_odd(i, 2 * xi + 1) for i, xi in enumerate(p.x, start=1))
    out.extend(EdgeAddress.r_even(i, 2 * yi) for i, yi in enumerate(p.y, start=1))
    out.extend(EdgeAddress.l_odd(i, 1) for i in range(1, p.c + 1))
    out.extend(EdgeAddress.l_even(i, 1) for i in range(1, p.d + 1))
    out.extend(EdgeAddress.l_unit(i) for i in range(1, p.t + 1))
    return out


# ---------------------------------------------------------------------------
# Materialization
# ---------------------------------------------------------------------------

HUB_LEFT = "vl"
HUB_RIGHT = "vr"


@dataclass(frozen=True)
class SpiderTree:
    """Materialized double spider: the tree plus the address <-> edge maps."""

    instance: CanonicalDoubleSpider
    params: Parameters
    tree: Tree
    edge_of: dict[EdgeAddress, Edge]
    address_of: dict[Edge, EdgeAddress]

    @property
    def hubs(self) -> tuple[str, str]:
        return (HUB_LEFT, HUB_RIGHT)


def materialize_tree(c: CanonicalDoubleSpider) -> SpiderTree:
    """Build the concrete tree with vertex ids mirroring the address scheme."""
    p = derive_parameters(c)
    s = p.s
    core_chain = [HUB_LEFT] + [f"core/{i}" for i in range(2, s + 1)] + [HUB_RIGHT]
    vertices: list[str] = list(core_chain)
    edge_of: dict[EdgeAddress, Edge] = {}

    for j in range(1, s + 1):
        edge_of[EdgeAddress.core(j)] = edge_key(core_chain[j - 1], core_chain[j])

    def add_right(kind: str, i: int, length: int) -> None:
        chain = [HUB_RIGHT] + [f"{kind}/{i}/{j}" for j in range(1, length + 1)]
        vertices.extend(chain[1:])
        for j in range(1, length + 1):
            edge_of[EdgeAddress(kind, i, j)] = edge_key(chain[j - 1], chain[j])

    def add_left(kind: str, i: int, length: int) -> None:
        # Hub-adjacent vertex has the top j; the pendant edge has j = 1.
        chain = [HUB_LEFT] + [f"{kind}/{i}/{j}" for j in range(length, 0, -1)]
        vertices.extend(chain[1:])
        for pos in range(1, length + 1):
            j = length + 1 - pos
            edge_of[EdgeAddress(kind, i, j)] = edge_key(chain[pos - 1], chain[pos])

    for i, xi in enumerate(p.x, start=1):
        add_right(KIND_R_ODD, i, 2 * xi + 1)
    for i, yi in enumerate(p.y, start=1):
        add_right(KIND_R_EVEN, i, 2 * yi)
    for i, wi in enumerate(p.w, start=1):
        add_left(KIND_L_ODD, i, 2 * wi + 1)
    for i, zi in enumerate(p.z, start=1):
        add_left(KIND_L_EVEN, i, 2 * zi)
    for i in range(1, p.t + 1):
        vid = f"L/unit/{i}"
        vertices.append(vid)
        edge_of[EdgeAddress.l_unit(i)] = edge_key(HUB_LEFT, vid)

    tree = make_tree(vertices, edge_of.values())
    assert tree.degree(HUB_LEFT) == p.deg_vl and tree.degree(HUB_RIGHT) == p.deg_vr
    assert sorted(v for v in tree.vertices if tree.degree(v) >= 3) == sorted([HUB_LEFT, HUB_RIGHT])
    return SpiderTree(
        instance=c,
        params=p,
        tree=tree,
        edge_of=edge_of,
        address_of={e: a for a, e in edge_of.items()},
    )


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


class CaseTag(Enum):
    EQUAL_DEG3 = "equal-deg3"
    EQUAL_DEG_HIGH = "equal-deg-high"
    UNEQUAL_ALL_UNIT_RIGHT = "unequal-all-unit-right"
    UNEQUAL_ODD_RIGHT = "unequal-odd-right"
    UNEQUAL_EVEN_RIGHT = "unequal-even-right"


def classify(p: Parameters) -> CaseTag:
    """Route an instance to the labeling lemma that covers it."""
    if p.deg_vl == p.deg_vr:
        return CaseTag.EQUAL_DEG3 if p.deg_vl == 3 else CaseTag.EQUAL_DEG_HIGH
    if p.b >= 1:
        return CaseTag.UNEQUAL_EVEN_RIGHT
    if any(xi >= 1 for xi in p.x):
        return CaseTag.UNEQUAL_ODD_RIGHT
    return CaseTag.UNEQUAL_ALL_UNIT_RIGHT


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

MIN_EDGES = 5  # core 1 plus four unit paths


@lru_cache(maxsize=None)
def _ascending_partitions(total: int, min_part: int = 1) -> tuple[tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(min_part, total + 1):
        for rest in _ascending_partitions(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _side_partitions(total: int) -> list[tuple[int, ...]]:
    return [p for p in _ascending_partitions(total) if len(p) >= 2]


def enumerate_instances(max_edges: int) -> Iterator[CanonicalDoubleSpider]:
    """Yield every canonical double spider with at most max_edges edges.

    Order: ascending edge count, then lexicographic on (core length, right
    lengths, left lengths).  Each unlabeled-tree isomorphism class appears
    exactly once.
    """
    for m in range(MIN_EDGES, max_edges + 1):
        batch: list[CanonicalDoubleSpider] = []
        for s in range(1, m - 3):
            for right_sum in range(2, m - s - 1):
                left_sum = m - s - right_sum
                if left_sum < 2:
                    continue
                for right in _side_partitions(right_sum):
                    for left in _side_partitions(left_sum):
                        if len(left) >= len(right) and _oriented_ok(left, right):
                            batch.append(CanonicalDoubleSpider(s, left, right))
        batch.sort(key=lambda c: c.sort_key)
        yield from batch


