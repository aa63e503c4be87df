#!/usr/bin/env python3
"""Search the six-vertex co-connected graphs for the extremal pair F1.

Prints every graph with connected domination number 3 on both sides of the
complement, outside the path/cycle families, together with its edge list
and the complement-pair index sums.
"""

from monoindex.graphs import complement, to_graph6
from monoindex.mvx import connected_domination_number, mvx_exact
from monoindex.survey import locate_F1


def main() -> None:
    found = locate_F1()
    print(f"candidates: {len(found)}")
    for g in found:
        gbar = complement(g)
        sums = [mvx_exact(g, k).value + mvx_exact(gbar, k).value for k in range(3, 7)]
        print(f"{to_graph6(g)}  edges={list(g.edges)}")
        print(
            f"  gamma_c={connected_domination_number(g)}"
            f"  gamma_c(complement)={connected_domination_number(gbar)}"
            f"  pair sums k=3..6: {sums}"
        )


if __name__ == "__main__":
    main()
