"""The vertex index: spanning-tree and domination solvers plus closed forms.

Computing the vertex index at k = n is the max-leaf spanning tree problem
in disguise (value l(T_max) + 1), which in turn is connected domination in
disguise (l(T_max) = n - gamma_c for n >= 3): the internal vertices of a
spanning tree form a connected dominating set and any connected dominating
set spans a tree whose complement sits among the leaves. Both solvers are
implemented independently here precisely so the tests can play them against
each other. On a graph with a cut vertex the value l(T_max) + 1 is the
index for every k from 2 to n, which is the fast path the decision
reduction rides on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .coloring import VertexColoring, verify_mvx_coloring
from .graphs import (
    BudgetError,
    Graph,
    connected_components,
    cut_vertices,
    diameter,
    is_connected,
    iter_bits,
    k_subsets,
    mask_from,
)
from .partitions import set_partitions_with_blocks

MAX_TREE_SUBSETS = 10_000_000
MAX_DOMINATION_VERTICES = 20
MAX_EXACT_VERTICES = 8


@dataclass(frozen=True)
class SpanningTreeResult:
    edges: tuple[tuple[int, int], ...]
    leaf_count: int


@dataclass(frozen=True)
class MvxResult:
    value: int
    witness: VertexColoring | None
    k: int
    method: str  # "exact-search" | "cut-vertex" | "closed-form"


def _tree_leaf_count(n: int, edges) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg if d == 1)


def max_leaf_spanning_tree(g: Graph, max_subsets: int = MAX_TREE_SUBSETS) -> SpanningTreeResult:
    """Exact maximum-leaf spanning tree by scanning all (n-1)-edge subsets.

    Deliberately oblivious to the domination duality so it can serve as its
    independent check. Refuses graphs where C(m, n-1) exceeds the budget.
    """
    if not is_connected(g) or g.n < 2:
        raise ValueError("spanning trees need a connected graph on >= 2 vertices")
    n, m = g.n, g.m
    if comb(m, n - 1) > max_subsets:
        raise BudgetError(
            f"C({m},{n - 1}) edge subsets exceed the budget of {max_subsets}; "
            "use max_leaf_heuristic for a witness"
        )
    edges = g.edges
    best_edges = None
    best_leaves = -1
    for combo in itertools.combinations(edges, n - 1):
        deg = [0] * n
        parent = list(range(n))
        ok = True
        for u, v in combo:
            deg[u] += 1
            deg[v] += 1
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False  # closes a cycle
                break
            parent[v] = u
        if not ok:
            continue
        # n-1 acyclic edges on n vertices always form a spanning tree
        leaves = sum(1 for d in deg if d == 1)
        if leaves > best_leaves:
            best_leaves = leaves
            best_edges = combo
    return SpanningTreeResult(best_edges, best_leaves)


def max_leaf_heuristic(g: Graph) -> SpanningTreeResult:
    """Greedy many-leaf spanning tree; a witness, not the optimum.

    Grows a connected core by repeatedly attaching the vertex that newly
    dominates the most vertices (ties to the lowest id), then hangs every
    non-core vertex off its lowest-id core neighbor.
    """
    if not is_connected(g) or g.n < 2:
        raise ValueError("spanning trees need a connected graph on >= 2 vertices")
    n = g.n
    full = g.full_mask
    closed = [g.adj[v] | 1 << v for v in range(n)]
    start = max(range(n), key=lambda v: (closed[v].bit_count(), -v))
    core = 1 << start
    dominated = closed[start]
    while dominated != full:
        best_v = -1
        best_gain = -1
        for v in iter_bits(dominated & ~core):
            if not g.adj[v] & core:
                continue
            gain = (closed[v] & ~dominated).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        core |= 1 << best_v
        dominated |= closed[best_v]
    # spanning tree: BFS tree of the core, leaves attached below it
    tree = []
    seen = 1 << start
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.adj[u] & core & ~seen):
                seen |= 1 << v
                tree.append((u, v) if u < v else (v, u))
                nxt.append(v)
        frontier = nxt
    for v in iter_bits(full & ~core):
        anchor = (g.adj[v] & core & -(g.adj[v] & core)).bit_length() - 1
        tree.append((anchor, v) if anchor < v else (v, anchor))
    tree.sort()
    return SpanningTreeResult(tuple(tree), _tree_leaf_count(n, tree))


def _subset_connected(g: Graph, mask: int) -> bool:
    comp = mask & -mask
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def minimum_connected_dominating_set(
    g: Graph, max_vertices: int = MAX_DOMINATION_VERTICES
) -> int:
    """Mask of a minimum connected dominating set (ascending-size search)."""
    if not is_connected(g):
        raise ValueError("connected domination needs a connected graph")
    n = g.n
    if n > max_vertices:
        raise BudgetError(f"subset search over {n} vertices exceeds the budget of {max_vertices}")
    if n == 1:
        return 0  # lone vertex: empty set by convention
    full = g.full_mask
    closed = [g.adj[v] | 1 << v for v in range(n)]
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover != full:
                continue
            mask = mask_from(combo)
            if _subset_connected(g, mask):
                return mask
    raise RuntimeError("unreachable: the full vertex set always dominates")


def connected_domination_number(g: Graph, max_vertices: int = MAX_DOMINATION_VERTICES) -> int:
    """Size of a minimum connected dominating set; 0 for the one-vertex graph."""
    return minimum_connected_dominating_set(g, max_vertices).bit_count()


def _tree_from_cds(g: Graph, core: int) -> SpanningTreeResult:
    """Spanning tree with internal vertices inside the given connected core."""
    tree = []
    start = (core & -core).bit_length() - 1 if core else 0
    seen = 1 << start
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.adj[u] & core & ~seen):
                seen |= 1 << v
                tree.append((u, v) if u < v else (v, u))
                nxt.append(v)
        frontier = nxt
    for v in iter_bits(g.full_mask & ~core):
        anchor = (g.adj[v] & core & -(g.adj[v] & core)).bit_length() - 1
        tree.append((anchor, v) if anchor < v else (v, anchor))
    tree.sort()
    return SpanningTreeResult(tuple(tree), _tree_leaf_count(g.n, tree))


def _max_leaf_tree(g: Graph) -> SpanningTreeResult:
    """Exact max-leaf tree by subset scan when cheap, else via a minimum
    connected dominating set (exact by the leaf/domination duality, which the
    test suite validates against the subset scan on every small graph)."""
    if comb(g.m, g.n - 1) <= 50_000:
        return max_leaf_spanning_tree(g)
    return _tree_from_cds(g, minimum_connected_dominating_set(g))


def mvx_n_formula(g: Graph) -> int:
    """l(T_max) + 1 from the exact spanning-tree solver; needs n >= 3."""
    if g.n < 3:
        raise ValueError("the spanning-tree formula needs n >= 3")
    return max_leaf_spanning_tree(g).leaf_count + 1


def mvx_via_cut_vertex(g: Graph, k: int) -> MvxResult:
    """On a graph with a cut vertex the index is l(T_max) + 1 for every k.

    The witness colors the internal vertices of a max-leaf spanning tree with
    one color and every leaf with a fresh one.
    """
    if not is_connected(g):
        raise ValueError("the index is defined for connected graphs only")
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    if not cut_vertices(g):
        raise ValueError("not applicable: the graph has no cut vertex")
    tree = _max_leaf_tree(g)
    deg = [0] * g.n
    for u, v in tree.edges:
        deg[u] += 1
        deg[v] += 1
    colors = [0] * g.n
    fresh = 1
    for v in range(g.n):
        if deg[v] == 1:
            colors[v] = fresh
            fresh += 1
    return MvxResult(tree.leaf_count + 1, VertexColoring(g, tuple(colors)), k, "cut-vertex")


def mvx_exact(g: Graph, k: int, max_vertices: int = MAX_EXACT_VERTICES) -> MvxResult:
    """Maximum color count over all vertex partitions that stay valid at k.

    Scans counts downward starting from the diameter bound n - diam + 2
    (merging classes preserves validity, so feasibility is downward closed
    and the first feasible count is the maximum).
    """
    if not is_connected(g):
        raise ValueError("the index is defined for connected graphs only")
    n = g.n
    if not 2 <= k <= n:
        raise ValueError(f"k={k} out of range 2..{n}")
    if n > max_vertices:
        raise BudgetError(
            f"partition search over {n} vertices exceeds the budget of {max_vertices}"
        )
    if k == 2:
        # adjacent pairs are always fine: the one-edge tree has no internals
        subsets = tuple(
            s for s in k_subsets(n, 2)
            if not g.adj[(s & -s).bit_length() - 1] & s
        )
    else:
        subsets = tuple(k_subsets(n, k))
    adj = g.adj
    start = min(n, n - diameter(g) + 2)
    for t in range(start, 0, -1):
        for colors in set_partitions_with_blocks(n, t):
            class_masks = [0] * t
            for v, c in enumerate(colors):
                class_masks[c] |= 1 << v
            covers = []
            for mask in class_masks:
                for comp in connected_components(g, mask):
                    cover = comp
                    for v in iter_bits(comp):
                        cover |= adj[v]
                    covers.append(cover)
            for s in subsets:
                if not any(cover & s == s for cover in covers):
                    break
            else:
                return MvxResult(t, VertexColoring(g, colors), k, "exact-search")
    raise RuntimeError("unreachable: one color is always valid on a connected graph")


def cycle_mvc_formula(n: int) -> int:
    """Monochromatic vertex-connection number of the n-cycle: n up to 5, then 3."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return n if n <= 5 else 3


def complement_cycle_mvx(n: int, k: int) -> int:
    """Closed form for the index of the complement of an n-cycle, n >= 6.

    The value is n for small k and n - 1 beyond a threshold that depends on
    n mod 4: (n-1)/2 for odd n, n/2 - 1 when 4 | n, and n/2 otherwise.
    """
    if n < 6:
        raise ValueError("the closed form covers n >= 6 only")
    if not 3 <= k <= n:
        raise ValueError(f"k={k} out of range 3..{n}")
    if n % 2 == 1:
        threshold = (n - 1) // 2
    elif n % 4 == 0:
        threshold = n // 2 - 1
    else:
        threshold = n // 2
    return n if k <= threshold else n - 1


def diameter_upper_bound(g: Graph) -> int:
    """n - diam(G) + 2, an upper bound for the vertex index at every k."""
    return g.n - diameter(g) + 2


def _mono_path(g: Graph, class_mask: int, a: int, b: int) -> list[int] | None:
    """Shortest a-b path whose internal vertices all lie in class_mask."""
    allowed = class_mask | 1 << a | 1 << b
    prev = {a: -1}
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.adj[u] & allowed):
                if v in prev:
                    continue
                prev[v] = u
                if v == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                nxt.append(v)
        frontier = nxt
    return None


def extract_mono_spanning_tree(vc: VertexColoring, v0: int) -> SpanningTreeResult:
    """Grow a spanning tree whose internal vertices all wear v0's color.

    Needs a cut vertex v0 and a coloring that is valid at k = 2. Every path
    between different components of G - v0 runs through v0, so its internal
    color is forced to v0's color c; the tree starts from one such path and
    repeatedly splices in the outer pieces of further c-internal paths, glued
    at their first and last vertices already in the tree.
    """
    g = vc.graph
    if not cut_vertices(g) >> v0 & 1:
        raise ValueError(f"vertex {v0} is not a cut vertex")
    if not verify_mvx_coloring(vc, 2):
        raise ValueError("the coloring is not valid at k=2")
    c = vc.colors[v0]
    class_mask = vc.class_mask(c)
    comps = connected_components(g, g.full_mask & ~(1 << v0))
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in iter_bits(comp):
            comp_of[v] = ci

    def other_component(v: int) -> int:
        for u in sorted(comp_of):
            if comp_of[u] != comp_of[v]:
                return u
        raise RuntimeError("unreachable: a cut vertex leaves >= 2 components")

    v_i = min(comp_of)
    v_j = other_component(v_i)
    path = _mono_path(g, class_mask, v_i, v_j)
    if path is None:
        raise RuntimeError("no internally monochromatic path despite a valid coloring")
    tree_edges = {tuple(sorted(e)) for e in zip(path, path[1:])}
    in_tree = mask_from(path)
    while in_tree != g.full_mask:
        v_s = ((g.full_mask & ~in_tree) & -(g.full_mask & ~in_tree)).bit_length() - 1
        v_t = other_component(v_s)
        path = _mono_path(g, class_mask, v_s, v_t)
        if path is None:
            raise RuntimeError("no internally monochromatic path despite a valid coloring")
        first = next(i for i, v in enumerate(path) if in_tree >> v & 1)
        last = max(i for i, v in enumerate(path) if in_tree >> v & 1)
        for seg in (path[: first + 1], path[last:]):
            tree_edges.update(tuple(sorted(e)) for e in zip(seg, seg[1:]))
            in_tree |= mask_from(seg)
    edges = tuple(sorted(tree_edges))
    if len(edges) != g.n - 1:
        raise RuntimeError("splicing produced a non-tree; this is a bug")
    deg = [0] * g.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if any(vc.colors[v] != c for v in range(g.n) if deg[v] >= 2):
        raise RuntimeError("tree has an internal vertex of the wrong color; this is a bug")
    return SpanningTreeResult(edges, sum(1 for d in deg if d == 1))
