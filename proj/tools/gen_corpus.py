#!/usr/bin/env python3
"""Regenerate data/connected_n*.g6: every connected graph on n vertices, one per
isomorphism class, in nauty canonical labeling. Requires pynauty and networkx."""

import argparse
import pathlib

import networkx as nx
import pynauty


def to_nauty(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.Graph(n, adjacency_dict=adj)


def extend(classes, n):
    """All graphs on n vertices up to isomorphism, from those on n - 1."""
    seen = {}
    for edges in classes:
        for mask in range(1 << (n - 1)):
            new = edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            g = to_nauty(n, new)
            cert = pynauty.certificate(g)
            if cert not in seen:
                seen[cert] = new
    return list(seen.values())


def canonical_line(n, edges):
    lab = pynauty.canon_label(to_nauty(n, edges))
    pos = {v: i for i, v in enumerate(lab)}
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((pos[u], pos[v]) for u, v in edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    classes = [[]]  # n = 1
    for n in range(1, args.max_n + 1):
        if n > 1:
            classes = extend(classes, n)
        lines = []
        for edges in classes:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                lines.append(canonical_line(n, edges))
        lines.sort()
        (out / f"connected_n{n}.g6").write_text("".join(l + "\n" for l in lines))
        print(f"n={n}: {len(classes)} graphs, {len(lines)} connected")


if __name__ == "__main__":
    main()
