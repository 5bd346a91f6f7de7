#!/usr/bin/env python3
"""Tour of graph powers and the structural invariants that drive every
bound: build a few named graphs, raise them to small powers, and print
the quantities the rest of the library conditions on."""

from distchroma import (
    cycle_graph,
    diameter,
    girth,
    hoffman_singleton,
    invariants,
    max_power_degree,
    path_graph,
    petersen,
    power_graph,
    tutte_coxeter,
)

GRAPHS = [
    ("path P8", path_graph(8)),
    ("cycle C9", cycle_graph(9)),
    ("petersen", petersen()),
    ("hoffman-singleton", hoffman_singleton()),
    ("tutte-coxeter", tutte_coxeter()),
]


def main():
    print("=" * 72)
    print("  INVARIANTS")
    print("=" * 72)
    print(f"  {'graph':<20} {'n':>4} {'m':>4} {'deg':>7} {'girth':>6} "
          f"{'diam':>5} {'kappa':>6} {'bip':>4}")
    for name, g in GRAPHS:
        inv = invariants(g)
        deg = f"{inv.min_degree}..{inv.max_degree}"
        gir = "inf" if inv.girth == float("inf") else inv.girth
        print(f"  {name:<20} {inv.n:>4} {inv.m:>4} {deg:>7} {gir:>6} "
              f"{inv.diameter:>5} {inv.connectivity:>6} "
              f"{'yes' if inv.is_bipartite else 'no':>4}")

    print()
    print("=" * 72)
    print("  POWER GRAPHS: degree growth against the ceiling M")
    print("=" * 72)
    for name, g in GRAPHS:
        if g.max_degree() < 3:
            continue
        row = [name]
        for gamma in (2, 3):
            pg = power_graph(g, gamma)
            ceiling = max_power_degree(g.max_degree(), gamma)
            row.append(f"gamma={gamma}: max deg {pg.graph.max_degree():>3} "
                       f"(M = {ceiling:>3})")
        print(f"  {row[0]:<20} {row[1]}   {row[2]}")

    print()
    print("  A Moore graph saturates the ceiling: every vertex of the")
    print("  petersen square reaches all other nine vertices.")
    pg = power_graph(petersen(), 2)
    print(f"  petersen^2 degrees: {sorted(set(pg.graph.degrees()))}, "
          f"edges {pg.graph.m} (complete: {pg.graph.m == 45})")


if __name__ == "__main__":
    main()
