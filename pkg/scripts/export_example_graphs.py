#!/usr/bin/env python3
"""Export the canonical example graphs (DOT + text) for all three families.

Covers the three-node vector-square graphs, the spinor chain, and the two
larger parameter grids whose parity patterns alternate by L-parent column.

Usage:
    python3 scripts/export_example_graphs.py [--outdir graphs]
"""

import argparse
import pathlib

from twistr import tpg
from twistr.liealg import family_spec

EXAMPLES = [
    # (family, l, params, label)
    ("a2even", 3, (1, 1), "bl-vector-square"),
    ("a2even", 4, (1, 2), "bl-vector-times-fundamental"),
    ("a2odd", 3, (1, 1), "cl-vector-square"),
    ("d2", 4, (1, 1), "bl-spinor-square"),
    ("d2", 4, (1, 3), "bl-spinor-chain"),
    ("a2even", 6, (2, 3), "bl-grid"),
    ("a2odd", 3, (2, 3), "cl-grid"),
]


def run(outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    for family, l, params, label in EXAMPLES:
        graph = tpg.build_graph(family_spec(family, l), params)
        for fmt, ext in (("dot", "dot"), ("text", "txt")):
            path = outdir / f"{label}.{ext}"
            path.write_text(tpg.export_graph(graph, fmt))
        print(f"{label:32s} {len(graph.nodes)} nodes, "
              f"{len(graph.edges)} edges -> {outdir}/{label}.{{dot,txt}}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="graphs", type=pathlib.Path)
    run(ap.parse_args().outdir)
