"""The edge index: closed form, extremal construction, simplification, oracle.

For any connected graph and any k >= 3 the maximum number of colors in a
valid edge coloring is m - n + 2, witnessed by coloring a spanning tree
with one color and every leftover edge with a fresh one. The brute-force
searcher below is the independent check of that closed form (and the only
exact route for k = 2, where the closed form does not apply).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, color_classes, verify_mx_coloring
from .graphs import BudgetError, Graph, is_connected, iter_bits, k_subsets
from .partitions import set_partitions_with_blocks

MAX_BRUTEFORCE_EDGES = 10


@dataclass(frozen=True)
class MxResult:
    value: int
    witness: EdgeColoring
    k: int


def mx_k_formula(g: Graph, k: int) -> int:
    """m - n + 2, valid for 3 <= k <= n on connected graphs with n >= 3."""
    if not is_connected(g):
        raise ValueError("the closed form applies to connected graphs only")
    if g.n < 3:
        raise ValueError("the closed form needs n >= 3")
    if k < 3:
        raise ValueError(
            "the closed form covers 3 <= k <= n only; for k=2 the index can "
            "exceed m-n+2, use mx_exact_bruteforce"
        )
    if k > g.n:
        raise ValueError(f"k={k} exceeds the vertex count {g.n}")
    return g.m - g.n + 2


def construct_extremal_mx(g: Graph) -> EdgeColoring:
    """Spanning tree in color 0, every remaining edge a fresh color.

    Uses the BFS tree from vertex 0, so the witness is deterministic. The
    result uses m - n + 2 colors and is valid for every k in 3..n.
    """
    if not is_connected(g):
        raise ValueError("extremal construction needs a connected graph")
    if g.n == 1:
        return EdgeColoring(g, ())
    tree_edges = set()
    seen = 1
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.adj[u] & ~seen):
                seen |= 1 << v
                tree_edges.add((u, v) if u < v else (v, u))
                nxt.append(v)
        frontier = nxt
    colors = []
    fresh = 1
    for e in g.edges:
        if e in tree_edges:
            colors.append(0)
        else:
            colors.append(fresh)
            fresh += 1
    return EdgeColoring(g, tuple(colors))


def simplify_coloring(ec: EdgeColoring, k: int) -> EdgeColoring:
    """Merge overlapping nontrivial color trees until the coloring is simple.

    Simple means any two color classes with >= 2 edges share at most one
    vertex. Whenever classes c and d share p >= 2 vertices, their union H is
    connected with |V(H)| - 1 + (p - 1) edges: a spanning tree of H keeps
    color c and the p - 1 leftover edges get fresh colors. Each pass raises
    (num_colors, trivial-color count) lexicographically, so this terminates,
    and it never uses fewer colors than the input.
    """
    g = ec.graph
    if not verify_mx_coloring(ec, k):
        raise ValueError(f"input coloring is not valid at k={k}")
    if any(not cc.is_tree for cc in color_classes(ec)):
        raise ValueError("simplification expects tree classes; run normalize_to_forest first")
    colors = list(ec.colors)
    next_color = max(colors) + 1
    while True:
        classes = [cc for cc in color_classes(EdgeColoring(g, tuple(colors))) if not cc.trivial]
        pair = None
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                if (classes[i].vertices & classes[j].vertices).bit_count() >= 2:
                    pair = (classes[i], classes[j])
                    break
            if pair:
                break
        if pair is None:
            break
        keep = pair[0]
        union_idxs = sorted(g.edge_index[e] for cc in pair for e in cc.edges)
        # Kruskal over the union: tree edges take color c, the rest fresh ones
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx in union_idxs:
            u, v = g.edges[idx]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                colors[idx] = next_color
                next_color += 1
            else:
                parent[rv] = ru
                colors[idx] = keep.color
    out = EdgeColoring(g, tuple(colors)).renumbered()
    if not verify_mx_coloring(out, k):
        raise RuntimeError("simplification broke the coloring; this is a bug")
    return out


def _partition_component_masks(g: Graph, colors: tuple[int, ...], blocks: int) -> list[int]:
    """Vertex masks of all monochromatic components of an edge partition."""
    groups: list[list[int]] = [[] for _ in range(blocks)]
    for idx, c in enumerate(colors):
        groups[c].append(idx)
    edges = g.edges
    masks = []
    for idxs in groups:
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx in idxs:
            u, v = edges[idx]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
        comps: dict[int, int] = {}
        for x in parent:
            r = find(x)
            comps[r] = comps.get(r, 0) | 1 << x
        masks.extend(comps.values())
    return masks


def mx_exact_bruteforce(g: Graph, k: int, max_edges: int = MAX_BRUTEFORCE_EDGES) -> MxResult:
    """Maximum color count over all edge partitions that stay valid at k.

    Scans candidate color counts downward: merging two classes of a valid
    coloring keeps it valid, so feasibility is downward closed in the class
    count and the first feasible count is the maximum. Partitions come as
    restricted growth strings, one per relabeling class.
    """
    if not is_connected(g):
        raise ValueError("the index is defined for connected graphs only")
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    m = g.m
    if m > max_edges:
        raise BudgetError(
            f"partition search over {m} edges exceeds the budget of {max_edges}"
        )
    subsets = tuple(k_subsets(g.n, k))
    for t in range(m, 0, -1):
        for colors in set_partitions_with_blocks(m, t):
            masks = _partition_component_masks(g, colors, t)
            for s in subsets:
                if not any(mask & s == s for mask in masks):
                    break
            else:
                return MxResult(t, EdgeColoring(g, colors), k)
    raise RuntimeError("no valid coloring found; this is a bug")  # t=1 always valid
