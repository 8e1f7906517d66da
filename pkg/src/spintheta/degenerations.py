"""Stable-curve models of degenerate Scorza correspondences.

Each builder returns a decorated component/node list for the limit of the
correspondence over a general point of one divisor in the moduli space of
even spin curves: the theta-null divisor, the boundary divisors A_0, B_0,
A_i, B_i (and the quotient-side model over the theta-null divisor).  The only
numerical content is exact integer bookkeeping; the key identity is

    p_a = sum of component genera + #nodes - #components + 1
        = 1 + 3g(g-1)        for the correspondence itself,
        = 1 + 3g(g-1)/2      for its quotient model.

For A_0, B_0, A_i the pairwise incidence is known and stored explicitly; for
B_i only the total node count is certified, so the model carries a bare count
with incidence_known = False.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import GenusTooSmall, IndexOutOfRange

__all__ = [
    "Component",
    "StableCurveModel",
    "arithmetic_genus",
    "limit_model_thetanull",
    "limit_model_T_thetanull",
    "limit_model_A0",
    "limit_model_B0",
    "limit_model_Ai",
    "limit_model_Bi",
    "sym_square_cohomology",
    "genus_table",
    "GenusTable",
]


@dataclass(frozen=True)
class Component:
    label: str
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"component {self.label!r} has negative genus")


@dataclass(frozen=True)
class StableCurveModel:
    """Components plus either an explicit node list or a bare node count.

    ``nodes`` entries are pairs of component indices; a self-pair (i, i)
    records a non-separating self-node.  When ``incidence_known`` the dual
    graph must be connected.
    """

    components: tuple[Component, ...]
    nodes: tuple[tuple[int, int], ...] | None = None
    node_total: int | None = None
    incidence_known: bool = True

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("a model needs at least one component")
        if self.incidence_known:
            if self.nodes is None:
                raise ValueError("incidence-known model needs an explicit node list")
            nv = len(self.components)
            for a, b in self.nodes:
                if not (0 <= a < nv and 0 <= b < nv):
                    raise IndexOutOfRange(f"node ({a}, {b}) references a missing component")
            object.__setattr__(self, "node_total", len(self.nodes))
            if not self._connected():
                raise ValueError("dual graph is not connected")
        else:
            if self.node_total is None or self.node_total < 0:
                raise ValueError("incidence-unknown model needs a nonnegative node count")

    def _connected(self) -> bool:
        nv = len(self.components)
        adj: list[set[int]] = [set() for _ in range(nv)]
        for a, b in self.nodes or ():
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == nv

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def num_nodes(self) -> int:
        assert self.node_total is not None
        return self.node_total

    def genus_sum(self) -> int:
        return sum(c.genus for c in self.components)

    def node_branches(self, index: int) -> int:
        """Number of node branches on one component (self-nodes count twice)."""
        if self.nodes is None:
            raise ValueError("incidence not recorded for this model")
        return sum((a == index) + (b == index) for a, b in self.nodes)

    def to_json(self) -> dict:
        out: dict = {
            "components": [{"label": c.label, "genus": c.genus} for c in self.components],
            "incidence_known": self.incidence_known,
        }
        if self.incidence_known:
            out["nodes"] = [[a, b] for a, b in self.nodes or ()]
        else:
            out["nodes"] = {"count": self.node_total}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "StableCurveModel":
        comps = tuple(Component(c["label"], int(c["genus"])) for c in data["components"])
        if data.get("incidence_known", True):
            nodes = tuple((int(a), int(b)) for a, b in data["nodes"])
            return cls(comps, nodes=nodes, incidence_known=True)
        return cls(comps, node_total=int(data["nodes"]["count"]), incidence_known=False)


def arithmetic_genus(model: StableCurveModel) -> int:
    """p_a = sum of genera + nodes - components + 1."""
    return model.genus_sum() + model.num_nodes - model.num_components + 1


def _require_genus(g: int, minimum: int = 3) -> None:
    if g < minimum:
        raise GenusTooSmall(f"g = {g} below the supported minimum {minimum}")


def limit_model_thetanull(g: int) -> StableCurveModel:
    """Limit over the theta-null divisor: trace-curve double cover glued to
    the branched double cover of the curve along the 4g-4 ramification points.
    """
    _require_genus(g)
    comps = (
        Component("trace_double_cover", (g - 1) * (3 * g - 8) + 1),
        Component("branched_double_cover", 4 * g - 3),
    )
    nodes = tuple((0, 1) for _ in range(4 * g - 4))
    return StableCurveModel(comps, nodes=nodes)


def limit_model_T_thetanull(g: int) -> StableCurveModel:
    """Quotient-side limit over the theta-null divisor: the trace curve plus
    the diagonal copy of the curve, meeting transversally at 4g-4 points."""
    _require_genus(g)
    trace_genus, rem = divmod((g - 3) * (3 * g - 4), 2)
    assert rem == 0
    comps = (Component("trace_curve", trace_genus), Component("diagonal", g))
    nodes = tuple((0, 1) for _ in range(4 * g - 4))
    return StableCurveModel(comps, nodes=nodes)


def limit_model_A0(g: int) -> StableCurveModel:
    """Limit over A_0: one irreducible curve of genus (g-1)(3g-2) with 2g-1
    pairs of points identified (self-nodes)."""
    _require_genus(g)
    comps = (Component("normalized_correspondence", (g - 1) * (3 * g - 2)),)
    nodes = tuple((0, 0) for _ in range(2 * g - 1))
    return StableCurveModel(comps, nodes=nodes)


def limit_model_B0(g: int) -> StableCurveModel:
    """Limit over B_0: the correspondence of the normalization plus the two
    graph embeddings of the pencil map, glued along 2g-2 + 2g-2 + 2 nodes."""
    _require_genus(g)
    comps = (
        Component("core_correspondence", 1 + 3 * (g - 1) * (g - 2)),
        Component("pencil_graph_1", g - 1),
        Component("pencil_graph_2", g - 1),
    )
    nodes = (
        tuple((0, 1) for _ in range(2 * g - 2))
        + tuple((0, 2) for _ in range(2 * g - 2))
        + ((1, 2), (1, 2))
    )
    return StableCurveModel(comps, nodes=nodes)


def limit_model_Ai(g: int, i: int) -> StableCurveModel:
    """Limit over A_i (1 <= i <= g-1): the two factor correspondences plus a
    grid of vertical/horizontal fibre copies in the two mixed blocks.

    Components: the correspondence of the genus-i factor, the correspondence
    of the genus-(g-i) factor, then per mixed block i copies of the second
    factor and g-i copies of the first.  Grid nodes join every vertical copy
    to every horizontal copy within a block; one attachment node joins each
    copy to the matching correspondence.  Totals: 2+2g components and
    2i(g-i) + 2g nodes.
    """
    _require_genus(g)
    if not 1 <= i <= g - 1:
        raise IndexOutOfRange(f"A_i index i = {i} outside 1..{g - 1}")
    j = g - i
    comps = [
        Component("correspondence_first", 1 + 3 * i * (i - 1)),
        Component("correspondence_second", 1 + 3 * j * (j - 1)),
    ]
    nodes: list[tuple[int, int]] = []
    for block in ("mixed1", "mixed2"):
        vert = []
        for ell in range(i):
            vert.append(len(comps))
            comps.append(Component(f"{block}_vertical_{ell}", j))
        horiz = []
        for k in range(j):
            horiz.append(len(comps))
            comps.append(Component(f"{block}_horizontal_{k}", i))
        nodes.extend((v, h) for v in vert for h in horiz)
        nodes.extend((0, v) for v in vert)
        nodes.extend((1, h) for h in horiz)
    return StableCurveModel(tuple(comps), nodes=tuple(nodes))


def limit_model_Bi(g: int, i: int) -> StableCurveModel:
    """Limit over B_i (2 <= i <= g-2): the two normalized invariant curves
    plus fibre copies over the supports of the two odd spin structures.

    Only the aggregate node count 2i(g-i) is certified, so the model carries
    incidence_known = False.
    """
    _require_genus(g, 4)
    if not 2 <= i <= g - 2:
        raise IndexOutOfRange(f"B_i index i = {i} outside 2..{g - 2}")
    j = g - i
    comps = [
        Component("invariant_normalized_first", 3 * i * i + i - 1),
        Component("invariant_normalized_second", 3 * j * j + j - 1),
    ]
    comps += [Component(f"support_copy_second_{k}", j) for k in range(2 * (i - 1))]
    comps += [Component(f"support_copy_first_{k}", i) for k in range(2 * (j - 1))]
    return StableCurveModel(tuple(comps), node_total=2 * i * j, incidence_known=False)


def sym_square_cohomology(h0: int, h1: int, variant: str = "plain") -> tuple[int, int, int]:
    """Cohomology dimensions on the symmetric square induced by a line bundle
    with h^0 = h0, h^1 = h1 on the curve.

    "plain" is the diagonal-symmetric bundle: (Sym^2 of h0, h0*h1, wedge^2 of
    h1); "minus_delta" twists down by the half-diagonal and swaps the Sym/
    wedge roles: (wedge^2 of h0, h0*h1, Sym^2 of h1).
    """
    if h0 < 0 or h1 < 0:
        raise ValueError("cohomology dimensions must be nonnegative")
    if variant == "plain":
        return comb(h0 + 1, 2), h0 * h1, comb(h1, 2)
    if variant == "minus_delta":
        return comb(h0, 2), h0 * h1, comb(h1 + 1, 2)
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class GenusTable:
    """The genus/arithmetic-genus formulas attached to one ambient genus g."""

    g: int
    entries: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, key: str) -> int:
        return self.entries[key]


def genus_table(g: int) -> GenusTable:
    """Exact values of the eight curve invariants used by the limit models.

    Keys: correspondence (1 + 3g(g-1)), quotient (1 + 3g(g-1)/2), trace_curve,
    trace_double_cover, branched_double_cover, normalized_correspondence,
    invariant_curve (the nodal symmetric-square preimage attached to an odd
    spin structure and a marked point) and invariant_quotient.
    """
    _require_genus(g)

    def half(n: int) -> int:
        q, r = divmod(n, 2)
        assert r == 0, "formula must be integral"
        return q

    entries = {
        "correspondence": 1 + 3 * g * (g - 1),
        "quotient": 1 + half(3 * g * (g - 1)),
        "trace_curve": half((g - 3) * (3 * g - 4)),
        "trace_double_cover": (g - 1) * (3 * g - 8) + 1,
        "branched_double_cover": 4 * g - 3,
        "normalized_correspondence": (g - 1) * (3 * g - 2),
        "invariant_curve": 3 * g * g + g,
        "invariant_quotient": half(g * (3 * g + 1)),
    }
    return GenusTable(g, entries)
