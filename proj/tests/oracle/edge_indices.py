#!/usr/bin/env python3
"""Independent oracle for the frozen values in the C++ unit tests.

Computes edge indices by building the line graph with networkx and summing
BFS distances there, and Djokovic-Winkler classes by the textbook pair test.
Shares no code with the C++ library.
"""
import itertools

import networkx as nx


def wiener(g):
    d = dict(nx.all_pairs_shortest_path_length(g))
    pairs = list(itertools.combinations(g.nodes, 2))
    w = sum(d[u][v] for u, v in pairs)
    ww = (w + sum(d[u][v] ** 2 for u, v in pairs)) // 2
    return w, ww


def edge_indices(g):
    lg = nx.line_graph(g)
    w_e, ww_e = wiener(lg)
    m = g.number_of_edges()
    c2 = m * (m - 1) // 2
    return {"m": m, "w_e": w_e, "w_e_hat": w_e - c2, "ww_e": ww_e,
            "ww_star": ww_e - 2 * w_e + c2}


def theta_classes(g, edges):
    d = dict(nx.all_pairs_shortest_path_length(g))
    uf = nx.utils.UnionFind(range(len(edges)))
    for i, (x, y) in enumerate(edges):
        for j, (u, v) in enumerate(edges):
            if d[x][u] + d[y][v] != d[x][v] + d[y][u]:
                uf.union(i, j)
    return sorted(sorted(s) for s in uf.to_sets())


def hex_graph(hexes):
    offs = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)]
    g = nx.Graph()
    for q, r in hexes:
        cx, cy = 2 * q + r, 3 * r
        pts = [(cx + dx, cy + dy) for dx, dy in offs]
        for i in range(6):
            g.add_edge(pts[i], pts[(i + 1) % 6])
    return g


def main():
    c6 = nx.cycle_graph(6)
    print("C6 bfs multiset", sorted(nx.single_source_shortest_path_length(c6, 0).values()))
    print("C6 vertex W/WW", wiener(c6))
    print("P4 vertex W/WW", wiener(nx.path_graph(4)))
    for name, g in [("P3", nx.path_graph(3)), ("P4", nx.path_graph(4)),
                    ("P5", nx.path_graph(5)), ("C4", nx.cycle_graph(4)),
                    ("C6", c6), ("K13", nx.star_graph(3)),
                    ("Q3", nx.hypercube_graph(3)), ("K2", nx.path_graph(2))]:
        print(name, edge_indices(g))
    for h in range(1, 9):
        print("L%d" % h, edge_indices(hex_graph([(i, 0) for i in range(h)])))
    print("phenanthrene", edge_indices(hex_graph([(0, 0), (1, 0), (1, 1)])))
    print("pyrene", edge_indices(hex_graph([(0, 0), (1, 0), (0, 1), (1, 1)])))
    k23 = nx.complete_bipartite_graph(2, 3)
    k23_edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    print("K23 theta", theta_classes(k23, k23_edges))
    c6_edges = [(i, (i + 1) % 6) for i in range(6)]
    print("C6 theta", theta_classes(c6, c6_edges))
    print("C4 theta", theta_classes(nx.cycle_graph(4), [(i, (i + 1) % 4) for i in range(4)]))


if __name__ == "__main__":
    main()
