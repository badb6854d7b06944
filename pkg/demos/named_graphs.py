"""Build and verify box representations for a gallery of cubic graphs."""

import networkx as nx

from cubicbox import Graph, build_representation


def from_nx(G):
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(G.number_of_nodes(),
                 [(mapping[u], mapping[v]) for u, v in G.edges()])


GALLERY = {
    "K4": from_nx(nx.complete_graph(4)),
    "K3,3": from_nx(nx.complete_bipartite_graph(3, 3)),
    "3-cube": from_nx(nx.hypercube_graph(3)),
    "prism": from_nx(nx.circular_ladder_graph(3)),
    "Pappus": from_nx(nx.LCF_graph(18, [5, 7, -7, 7, -7, -5], 3)),
    "Mobius-Kantor": from_nx(nx.LCF_graph(16, [5, -5], 8)),
    "Petersen": from_nx(nx.petersen_graph()),
    "Desargues": from_nx(nx.desargues_graph()),
    "Heawood": from_nx(nx.heawood_graph()),
}


def main():
    for name, g in GALLERY.items():
        res = build_representation(g)
        classes = res.partition.classes
        width = max(int(res.boxes[:, 0, 1].max() - res.boxes[:, 0, 0].min()),
                    int(res.boxes[:, 1, 1].max() - res.boxes[:, 1, 0].min()))
        print(f"{name:>14}: n={g.n:3d} strands={len(res.partition.strands)} "
              f"chains={len(res.partition.chains)} "
              f"clusters={len(res.partition.clusters)} "
              f"verified={res.report.ok}")


if __name__ == "__main__":
    main()
