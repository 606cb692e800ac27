"""Deterministic instance generation: random theories and graph reductions.

The three reductions mirror the constructions that make the exterior and
charset-interior problems hard; at small graph sizes they double as strong
cross-validation instances, because the expected answer is computable by
plain graph search:

* :func:`independent_set_instance` -- the exterior query over the edge
  theory answers NO exactly when the graph has an independent set of size
  at least k;
* :func:`interior_consistency_instance` -- the charset-interior consistency
  query (empty clause) answers NO exactly when the graph has no independent
  set of size at least k;
* :func:`vertex_cover_instance` -- the charset-exterior query answers NO
  exactly when the graph has a vertex cover of size at most k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import Clause, HornTheory, ModelSet


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..nv``; edges as sorted pairs."""

    nv: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.nv < 1:
            raise ValueError("graph needs at least one vertex")
        canon = []
        seen = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not 1 <= u <= self.nv or not 1 <= v <= self.nv:
                raise ValueError(f"edge {e} out of range for nv={self.nv}")
            if (u, v) not in seen:
                seen.add((u, v))
                canon.append((u, v))
        object.__setattr__(self, "edges", tuple(sorted(canon)))


def named_graph(spec: str) -> Graph:
    """Small named families: ``k4`` complete, ``p4`` path, ``c4`` cycle, ``e4`` edgeless."""
    if len(spec) < 2:
        raise ValueError(f"bad graph spec {spec!r}")
    kind = spec[0].lower()
    try:
        nv = int(spec[1:])
    except ValueError:
        raise ValueError(f"bad graph spec {spec!r}") from None
    if nv < 1:
        raise ValueError(f"bad graph spec {spec!r}")
    if kind == "k":
        return Graph(nv, tuple(combinations(range(1, nv + 1), 2)))
    if kind == "p":
        return Graph(nv, tuple((i, i + 1) for i in range(1, nv)))
    if kind == "c":
        if nv < 3:
            raise ValueError("cycles need at least 3 vertices")
        return Graph(nv, tuple((i, i + 1) for i in range(1, nv)) + ((1, nv),))
    if kind == "e":
        return Graph(nv, ())
    raise ValueError(f"bad graph spec {spec!r}")


def max_independent_set_size(g: Graph) -> int:
    """Brute-force maximum independent set size (meant for small graphs)."""
    best = 0
    edge_masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edges]
    for subset in range(1 << g.nv):
        if all(subset & em != em for em in edge_masks):
            best = max(best, subset.bit_count())
    return best


def has_independent_set(g: Graph, k: int) -> bool:
    return max_independent_set_size(g) >= k


def min_vertex_cover_size(g: Graph) -> int:
    """Complement of a maximum independent set."""
    return g.nv - max_independent_set_size(g)


def has_vertex_cover(g: Graph, k: int) -> bool:
    return min_vertex_cover_size(g) <= k


def random_horn(
    n: int, m: int, max_len: int, neg_only: bool = False, seed: int = 0
) -> HornTheory:
    """Reproducible random Horn theory; duplicates collapse, so the clause
    count can fall short of ``m``."""
    if n < 1 or m < 0 or max_len < 1:
        raise ValueError("parameters must be positive")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        length = rng.randint(1, min(max_len, n))
        variables = rng.sample(range(1, n + 1), length)
        if neg_only or rng.random() < 0.5:
            clauses.append(Clause(neg=frozenset(variables)))
        else:
            head = variables[rng.randrange(length)]
            clauses.append(
                Clause(pos=frozenset({head}), neg=frozenset(variables) - {head})
            )
    return HornTheory(n, tuple(clauses))


def independent_set_instance(g: Graph, k: int) -> tuple[HornTheory, Clause, int]:
    """Edge theory, all-negative query, alpha = nv - k.

    The alpha-exterior of the edge theory fails to entail the query exactly
    when the graph has an independent set of size >= k.
    """
    if not 1 <= k <= g.nv:
        raise ValueError(f"k must be in 1..{g.nv}, got {k}")
    theory = HornTheory(g.nv, tuple(Clause(neg=frozenset(e)) for e in g.edges))
    query = Clause(neg=frozenset(range(1, g.nv + 1)))
    return theory, query, g.nv - k


def interior_consistency_instance(g: Graph, k: int) -> tuple[ModelSet, int]:
    """Characteristic-set family with off-sets {i,j} and {i,j,l} per edge.

    The alpha-interior of the represented theory is consistent (the empty
    clause is NOT entailed) exactly when the graph has no independent set of
    size >= k.
    """
    if g.nv < 3 or not g.edges:
        raise ValueError("reduction needs nv >= 3 and at least one edge")
    if not 1 <= k <= g.nv:
        raise ValueError(f"k must be in 1..{g.nv}, got {k}")
    full = (1 << g.nv) - 1
    bits = []
    for u, v in g.edges:
        off = (1 << (u - 1)) | (1 << (v - 1))
        bits.append(full & ~off)
        for l in range(1, g.nv + 1):
            if l != u and l != v:
                bits.append(full & ~(off | (1 << (l - 1))))
    return ModelSet.from_bits(g.nv, bits), g.nv - k


def vertex_cover_instance(g: Graph, k: int) -> tuple[ModelSet, Clause, int]:
    """Charset over vertex variables plus one block of nv pad variables per
    edge; query negates every vertex and asserts every pad; alpha = k.

    The alpha-exterior fails to entail the query exactly when the graph has
    a vertex cover of size <= k.  Variable layout: vertices 1..nv first,
    then pad blocks in edge order.
    """
    if not 1 <= k < g.nv:
        raise ValueError(f"k must be in 1..{g.nv - 1}, got {k}")
    nv = g.nv
    n = nv + nv * len(g.edges)
    if n > 64:
        raise ValueError(f"reduction needs {n} variables, model sets are capped at 64")
    vertex_mask = (1 << nv) - 1
    block_masks = []
    for eidx in range(len(g.edges)):
        base = nv + eidx * nv
        block_masks.append(((1 << nv) - 1) << base)
    bits = []
    for v in range(1, nv + 1):
        on = vertex_mask & ~(1 << (v - 1))
        for eidx, e in enumerate(g.edges):
            if v not in e:
                on |= block_masks[eidx]
        bits.append(on)
    query = Clause(
        pos=frozenset(range(nv + 1, n + 1)),
        neg=frozenset(range(1, nv + 1)),
    )
    return ModelSet.from_bits(n, bits), query, k
