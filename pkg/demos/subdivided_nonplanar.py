"""Exploratory note: subdivided non-planar cubic graphs.

Subdividing every edge of a non-planar cubic graph (Petersen, K3,3) yields
a max-degree-3 graph that is known not to admit a representation by plane
rectangles, so three dimensions are genuinely needed for it.  Deciding
2-box nonexistence is out of scope for this package (no such decision
procedure is implemented); this script only demonstrates the 3-box side:
the pipeline handles the subdivided graphs and the verifier confirms the
certificates.
"""

import networkx as nx

from cubicbox import Graph, build_representation


def from_nx(G):
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(G.number_of_nodes(),
                 [(mapping[u], mapping[v]) for u, v in G.edges()])


def subdivide(g: Graph) -> Graph:
    edges = []
    nxt = g.n
    for u, v in g.iter_edges():
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return Graph(nxt, edges)


def main():
    for name, G in (("K3,3", nx.complete_bipartite_graph(3, 3)),
                    ("Petersen", nx.petersen_graph())):
        g = subdivide(from_nx(G))
        res = build_representation(g)
        print(f"subdivided {name}: n={g.n}, 3-box certificate verified: "
              f"{res.report.ok}")
    print("note: these graphs need all three dimensions; this package "
          "builds the 3-box side only and does not decide 2-box "
          "nonexistence.")


if __name__ == "__main__":
    main()
