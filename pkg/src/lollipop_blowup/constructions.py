"""Lollipops, the Y-family, and the candidate extremal graphs.

Vertex layouts (fixed so that witnesses are reproducible):

* ``lollipop(k, l)``: cycle ``0..k-1`` with centre ``0``; the pendant path
  is ``0, k, k+1, ..., k+l-1``.
* ``H(n, p, q)``: the ``q - 1`` clique vertices ``Q`` come first
  (``0..q-2``), then the Turán classes, larger classes first.
* ``H'(n, p, q)``: ``H(n, p, q)`` plus an edge between the two lowest labels
  of the first Turán class.
* ``H*(n)``: class ``0..ceil(n/2)-1`` then the rest; each class carries a
  maximum matching on consecutive labels, leaving its lowest label unmatched
  when the class is odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .canon import GraphFamily
from .graph import (
    Graph,
    disjoint_union,
    join,
    make_basic,
    turan,
    turan_part_sizes,
)

__all__ = [
    "LollipopParams",
    "ConstructionSpec",
    "Prediction",
    "lollipop",
    "y_family",
    "realize",
    "edge_count_formula",
    "turan_edges",
    "clique_vertices",
    "predicted_extremal",
    "small_case_family",
]

VARIANTS = ("H", "Hprime", "Hstar", "TuranOnly", "JoinFamily")


@dataclass(frozen=True)
class LollipopParams:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"cycle length must be >= 3, got {self.k}")
        if self.l < 1:
            raise ValueError(f"path length must be >= 1, got {self.l}")

    @property
    def t(self) -> int:
        return (self.k - 1) // 2 + (self.l - 1) // 2

    def m(self, p: int) -> int:
        """Order of the edge blow-up with ``(p+1)``-cliques."""
        return (self.k + self.l) * p


@dataclass(frozen=True)
class ConstructionSpec:
    """Symbolic description of a construction.

    ``extra`` is only used by ``JoinFamily``: ``(components, s)`` where
    ``components`` is a tuple of ``(kind, size, count)`` with kind one of
    ``"K"`` (clique of that order), ``"P"`` (path of that order) or ``"S"``
    (star with that many leaves), and the union is joined to ``I_s``.
    """

    variant: str
    n: int
    p: int = 2
    q: int = 1
    extra: tuple = field(default=())

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 0:
            raise ValueError("order must be non-negative")
        if self.variant in ("H", "Hprime", "TuranOnly") and self.p < 1:
            raise ValueError("need p >= 1")
        if self.variant in ("H", "Hprime") and not 1 <= self.q <= self.n:
            raise ValueError(f"need 1 <= q <= n, got q={self.q}, n={self.n}")
        if self.variant == "Hprime":
            first = turan_part_sizes(self.n - self.q + 1, self.p)[0]
            if first < 2:
                raise ValueError("H' needs a Turán class with at least two vertices")
        if self.variant == "Hstar" and self.n < 2:
            raise ValueError("H* needs n >= 2")
        if self.variant == "JoinFamily":
            comps, s = self.extra
            order = sum(_component_order(kind, size) * count for kind, size, count in comps)
            if any(count < 0 for _, _, count in comps):
                raise ValueError("component counts must be non-negative")
            if order + s != self.n:
                raise ValueError(f"components and join side give order {order + s}, not {self.n}")

    def label(self) -> str:
        if self.variant == "H":
            return f"H({self.n},{self.p},{self.q})"
        if self.variant == "Hprime":
            return f"H'({self.n},{self.p},{self.q})"
        if self.variant == "Hstar":
            return f"H*({self.n})"
        if self.variant == "TuranOnly":
            return f"T_{self.p}({self.n})"
        comps, s = self.extra
        parts = " u ".join(f"{c}{kind}{size}" for kind, size, c in comps if c)
        return f"({parts}) v I_{s}"


def _component_order(kind: str, size: int) -> int:
    return size + 1 if kind == "S" else size


def _component(kind: str, size: int) -> Graph:
    if kind == "K":
        return make_basic("complete", size)
    if kind == "P":
        return make_basic("path", size)
    if kind == "S":
        # S_0 is a lone vertex
        return make_basic("star", size) if size > 0 else Graph.empty(1)
    raise ValueError(f"unknown component kind {kind!r}")


def _component_edges(kind: str, size: int) -> int:
    if kind == "K":
        return comb(size, 2)
    if kind == "P":
        return max(size - 1, 0)
    return size


def lollipop(k: int, l: int) -> Graph:
    LollipopParams(k, l)
    edges = [(i, (i + 1) % k) for i in range(k)]
    prev = 0
    for j in range(l):
        edges.append((prev, k + j))
        prev = k + j
    return Graph.from_edges(k + l, edges)


def y_family(k: int, l: int) -> GraphFamily:
    """``P_{k+1}`` with ``P_{l+1}`` hung from each internal vertex, up to isomorphism."""
    if k < 2:
        raise ValueError("P_{k+1} needs an internal vertex, so k >= 2")
    if l < 1:
        raise ValueError("path length must be >= 1")
    fam = GraphFamily()
    for branch in range(1, k):
        edges = [(i, i + 1) for i in range(k)]
        prev = branch
        for j in range(l):
            edges.append((prev, k + 1 + j))
            prev = k + 1 + j
        fam.add(Graph.from_edges(k + l + 1, edges))
    return fam


def turan_edges(n: int, p: int) -> int:
    return comb(n, 2) - sum(comb(s, 2) for s in turan_part_sizes(n, p))


def clique_vertices(spec: ConstructionSpec) -> list[int]:
    """Labels of ``Q``, the dominating clique of ``H``/``H'``."""
    if spec.variant not in ("H", "Hprime"):
        raise ValueError("only H and H' have a dominating clique part")
    return list(range(spec.q - 1))


def realize(spec: ConstructionSpec) -> Graph:
    v = spec.variant
    if v == "TuranOnly":
        return turan(spec.n, spec.p)
    if v in ("H", "Hprime"):
        g = join(make_basic("complete", spec.q - 1), turan(spec.n - spec.q + 1, spec.p)) \
            if spec.q > 1 else turan(spec.n, spec.p)
        if v == "Hprime":
            a = spec.q - 1
            g = g.add_edge(a, a + 1)
        return g
    if v == "Hstar":
        big, small = (spec.n + 1) // 2, spec.n // 2
        g = join(Graph.empty(big), Graph.empty(small))
        for start, size in ((0, big), (big, small)):
            first = start + (size % 2)
            for a in range(first, start + size - 1, 2):
                g = g.add_edge(a, a + 1)
        return g
    comps, s = spec.extra
    body: Optional[Graph] = None
    for kind, size, count in comps:
        for _ in range(count):
            piece = _component(kind, size)
            body = piece if body is None else disjoint_union(body, piece)
    if body is None:
        body = Graph.empty(0)
    return join(body, Graph.empty(s))


def edge_count_formula(spec: ConstructionSpec) -> int:
    v = spec.variant
    if v == "TuranOnly":
        return turan_edges(spec.n, spec.p)
    if v in ("H", "Hprime"):
        q1 = spec.q - 1
        count = comb(q1, 2) + q1 * (spec.n - q1) + turan_edges(spec.n - q1, spec.p)
        return count + (v == "Hprime")
    if v == "Hstar":
        big, small = (spec.n + 1) // 2, spec.n // 2
        return big * small + big // 2 + small // 2
    comps, s = spec.extra
    order = sum(_component_order(kind, size) * c for kind, size, c in comps)
    inside = sum(_component_edges(kind, size) * c for kind, size, c in comps)
    return inside + order * s


@dataclass(frozen=True)
class Prediction:
    """Constructions predicted extremal for ``C_{k,l}^{p+1}``.

    ``rule`` names the parameter case that selected them.  ``covered`` is
    False when no known result applies (or the constructions do not fit in
    ``n`` vertices); ``specs`` is then empty.
    """

    specs: tuple[ConstructionSpec, ...]
    rule: str
    covered: bool = True


def small_case_family(n: int) -> list[ConstructionSpec]:
    """Extremal candidates for the blow-up of ``C_{3,1}`` with triangles.

    Follows the case split on divisibility of ``n``; in the last case every
    admissible star/triangle split is listed.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    c, f = (n + 1) // 2, n // 2
    hstar = ConstructionSpec("Hstar", n)
    if c % 3 == 0:
        triangles = ConstructionSpec("JoinFamily", n, extra=((("K", 3, c // 3),), f))
    if n % 12 == 0:
        return [triangles, hstar]
    if n % 4 == 0:
        return [hstar]
    if c % 3 == 0:
        return [triangles]
    out = []
    k1 = (c - 1) // 3
    assert 1 <= c - 3 * k1 <= 2
    out.append(ConstructionSpec(
        "JoinFamily", n,
        extra=((("K", 3, k1), ("P", 2, c - 3 * k1 - 1), ("P", 1, 3 * k1 + 2 - c)), f),
    ))
    out.append(hstar)
    for k2 in range(0, (c - 1) // 3 + 1):
        leaves = c - 3 * k2 - 1
        out.append(ConstructionSpec(
            "JoinFamily", n, extra=((("S", leaves, 1), ("K", 3, k2)), n // 2),
        ))
    return out


def predicted_extremal(k: int, l: int, p: int, n: int) -> Prediction:
    """Extremal construction(s) for ``C_{k,l}^{p+1}`` on ``n`` vertices.

    With ``t = floor((k-1)/2) + floor((l-1)/2)`` the known results read:

    * ``l`` even: ``H(n, p, t+2)``;
    * ``l`` odd, ``k`` odd: ``H(n, p, t+1)``;
    * ``l`` odd, ``k`` even: ``H'(n, p, t+1)``;

    covering ``p = 2`` (any ``k >= 3``), ``p = 3`` and ``p >= 4``, plus the
    ``l = 1`` case for ``(p, k) != (2, 3)``.  ``(p, k, l) = (2, 3, 1)`` gets
    the family from :func:`small_case_family`.
    """
    if k < 3 or l < 1 or p < 2:
        return Prediction((), f"outside k>=3, l>=1, p>=2 (k={k}, l={l}, p={p})", False)
    if (p, k, l) == (2, 3, 1):
        if n < 2:
            return Prediction((), "p=2, k=3, l=1 needs n >= 2", False)
        return Prediction(tuple(small_case_family(n)), "p=2, k=3, l=1: divisibility cases of n")
    t = LollipopParams(k, l).t
    if l == 1:
        scope = "l=1, (p,k)!=(2,3)"
    elif p == 2:
        scope = "p=2, k=3" if k == 3 else "p=2, k>=4"
    elif k % 2 == 0:
        scope = "p>=3"
    else:
        scope = "p=3" if p == 3 else "p>=4"
    rule = f"{scope}; k {'odd' if k % 2 else 'even'}, l {'odd' if l % 2 else 'even'}"
    if l % 2 == 0:
        variant, q = "H", t + 2
    elif k % 2:
        variant, q = "H", t + 1
    else:
        variant, q = "Hprime", t + 1
    try:
        spec = ConstructionSpec(variant, n, p, q)
    except ValueError as exc:
        return Prediction((), f"{rule}: {exc}", False)
    return Prediction((spec,), rule)
