#!/usr/bin/env python3
"""Regenerates the test fixtures.

pace/       ten graphs and ten decompositions in canonical PACE form
            (edges u < v in lexicographic order, bag members ascending),
            produced with networkx so they do not depend on the C++ code.
values/     small inputs with their VC-dimension, computed here by
            exhaustive subset enumeration and pinned in values.json.
"""

import itertools
import json
import pathlib

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree

HERE = pathlib.Path(__file__).resolve().parent


def write_gr(path, g):
    nodes = sorted(g.nodes())
    index = {v: i + 1 for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((index[u], index[v]))) for u, v in g.edges())
    lines = [f"p tw {len(nodes)} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")
    return index


def write_td(path, g, index):
    _, tree = treewidth_min_degree(g)
    bags = sorted(sorted(index[v] for v in bag) for bag in tree.nodes())
    bag_id = {tuple(b): i + 1 for i, b in enumerate(bags)}
    tree_edges = sorted(
        tuple(sorted((bag_id[tuple(sorted(index[v] for v in a))], bag_id[tuple(sorted(index[v] for v in b))])))
        for a, b in tree.edges()
    )
    width_plus_one = max(len(b) for b in bags)
    lines = [f"s td {len(bags)} {width_plus_one} {g.number_of_nodes()}"]
    lines += ["b " + " ".join(str(x) for x in [i + 1] + b) for i, b in enumerate(bags)]
    lines += [f"{a} {b}" for a, b in tree_edges]
    path.write_text("\n".join(lines) + "\n")


def pace_corpus():
    graphs = {
        "path10": nx.path_graph(10),
        "cycle7": nx.cycle_graph(7),
        "grid3x4": nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 4), ordering="sorted"),
        "petersen": nx.petersen_graph(),
        "k5": nx.complete_graph(5),
        "k33": nx.complete_bipartite_graph(3, 3),
        "star6": nx.star_graph(6),
        "gnp12": nx.gnp_random_graph(12, 0.3, seed=11),
        "gnp15": nx.gnp_random_graph(15, 0.25, seed=5),
        "tree14": nx.random_labeled_tree(14, seed=3) if hasattr(nx, "random_labeled_tree") else nx.random_tree(14, seed=3),
    }
    out = HERE / "pace"
    out.mkdir(exist_ok=True)
    for name, g in graphs.items():
        # PACE decompositions need at least one bag even for edgeless parts.
        index = write_gr(out / f"{name}.gr", g)
        write_td(out / f"{name}.td", g, index)


def shattered(edges, s):
    traces = {frozenset(e & s) for e in edges}
    return len(traces) == 2 ** len(s)


def vc(ground, edges):
    best = -1
    for r in range(len(ground) + 1):
        if any(shattered(edges, set(c)) for c in itertools.combinations(ground, r)):
            best = r
    return best


def graph_vc(g):
    # X = Y = V: the witnesses are the open neighbourhoods.
    return vc(sorted(g.nodes()), [set(g.neighbors(v)) for v in g.nodes()])


def values():
    out = HERE / "values"
    out.mkdir(exist_ok=True)
    pinned = {}

    ground = list(range(4))
    power = [set(c) for r in range(5) for c in itertools.combinations(ground, r)]
    power.sort(key=lambda e: sum(1 << v for v in e))
    (out / "powerset4.hg").write_text(
        "p hg 4 16\n" + "".join(" ".join(str(v + 1) for v in sorted(e)) + "\n" for e in power)
    )
    pinned["powerset4.hg"] = vc(ground, power)

    fano = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    (out / "fano.hg").write_text(
        "p hg 7 7\n" + "".join(" ".join(str(v + 1) for v in sorted(e)) + "\n" for e in fano)
    )
    pinned["fano.hg"] = vc(list(range(7)), fano)

    for name, g in {"c5.gr": nx.cycle_graph(5), "p4.gr": nx.path_graph(4),
                    "k33.gr": nx.complete_bipartite_graph(3, 3)}.items():
        write_gr(out / name, g)
        pinned[name] = graph_vc(g)

    (HERE / "values.json").write_text(json.dumps(pinned, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    pace_corpus()
    values()
