"""Degree-constrained bipartite relations via circulation with lower bounds.

Feasibility of a relation whose vertex degrees lie in [1, M0] on both sides
is a circulation problem; the standard lower-bound transform reduces it to
a single max-flow.  Words sharing a lattice point are interchangeable, so
feasibility is decided on the aggregated (point, count) graph: the
constraint matrix is totally unimodular, hence the aggregated fractional
relaxation, the aggregated integer problem and the word-level problem are
all equivalent.
"""
from __future__ import annotations

from typing import Optional

import networkx as nx

_INF = 10 ** 18


def _circulation_feasible(nodes, arcs):
    """arcs: list of (u, v, low, cap).  Returns flow dict per arc or None."""
    G = nx.DiGraph()
    G.add_nodes_from(nodes + ["_SS", "_TT"])
    excess = {n: 0 for n in nodes}
    for u, v, low, cap in arcs:
        if cap < low:
            return None
        if G.has_edge(u, v):
            raise ValueError("parallel arcs not supported")
        G.add_edge(u, v, capacity=cap - low)
        excess[v] += low
        excess[u] -= low
    total = 0
    for n in nodes:
        if excess[n] > 0:
            G.add_edge("_SS", n, capacity=excess[n])
            total += excess[n]
        elif excess[n] < 0:
            G.add_edge(n, "_TT", capacity=-excess[n])
    value, flow = nx.maximum_flow(G, "_SS", "_TT")
    if value != total:
        return None
    return {(u, v): flow[u][v] + low for u, v, low, cap in arcs}


def degree_constrained_relation(left_counts: dict, right_counts: dict,
                                allowed, m0: int) -> Optional[dict]:
    """Aggregated feasibility of a [1, m0]-degree relation between groups.

    ``left_counts``/``right_counts`` map group keys to word counts;
    ``allowed(z, w)`` says whether words of the two groups may be related.
    Returns the pair-count matrix {(z, w): pairs} when feasible, else None.
    """
    lefts = sorted(left_counts)
    rights = sorted(right_counts)
    nodes = ["_S", "_T"] + [("L", z) for z in lefts] + [("R", w) for w in rights]
    arcs = []
    for z in lefts:
        c = left_counts[z]
        arcs.append(("_S", ("L", z), c, m0 * c))
    for w in rights:
        d = right_counts[w]
        arcs.append((("R", w), "_T", d, m0 * d))
    any_edge = {z: False for z in lefts}
    for z in lefts:
        for w in rights:
            if allowed(z, w):
                any_edge[z] = True
                arcs.append((("L", z), ("R", w),
                             0, left_counts[z] * right_counts[w]))
    arcs.append(("_T", "_S", 0, _INF))
    sol = _circulation_feasible(nodes, arcs)
    if sol is None:
        return None
    pairs = {}
    for (u, v), f in sol.items():
        if isinstance(u, tuple) and u[0] == "L" and isinstance(v, tuple) and f > 0:
            pairs[(u[1], v[1])] = f
    return pairs


def word_level_relation(n_left: int, n_right: int, edges, m0: int):
    """Explicit witness relation on words, degrees in [1, m0] both sides.

    ``edges`` is an iterable of (i, j) admissible word pairs.  Returns a
    sorted list of pairs or None.  Intended for small cut-sets only.
    """
    nodes = ["_S", "_T"] + [("L", i) for i in range(n_left)] + [
        ("R", j) for j in range(n_right)
    ]
    arcs = [("_S", ("L", i), 1, m0) for i in range(n_left)]
    arcs += [(("R", j), "_T", 1, m0) for j in range(n_right)]
    arcs += [(("L", i), ("R", j), 0, 1) for i, j in sorted(set(edges))]
    arcs.append(("_T", "_S", 0, _INF))
    sol = _circulation_feasible(nodes, arcs)
    if sol is None:
        return None
    return sorted(
        (u[1], v[1])
        for (u, v), f in sol.items()
        if isinstance(u, tuple) and u[0] == "L" and isinstance(v, tuple) and f > 0
    )
