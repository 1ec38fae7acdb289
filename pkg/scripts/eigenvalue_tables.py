#!/usr/bin/env python3
"""Print symbolic eigenvalue tables rho_nu(u) for a parameter sweep.

For each case the table lists every component nu with its parity and its
eigenvalue as an element of Q(u) at the given rational w.  Recursion and
closed form are compared where a closed form exists.

Usage:
    python3 scripts/eigenvalue_tables.py [--family a2even] [--lmax 4] [--w 3/2]
"""

import argparse
from fractions import Fraction

from twistr import tpg
from twistr.liealg import family_spec
from twistr.scalars import QSample, format_scalar


def sweep(family, lmax, w):
    qs = QSample(w)
    lmin = {"a2even": 1, "a2odd": 3, "d2": 2}[family]
    for l in range(lmin, lmax + 1):
        kmax = l if family == "a2even" else 3
        for k in range(1, kmax + 1):
            for r in range(k, kmax + 1):
                spec = family_spec(family, l)
                if not spec.admissible((k, r)):
                    continue
                graph = tpg.build_graph(spec, (k, r))
                rho, _ = tpg.eigenvalues_by_recursion(graph, qs)
                try:
                    closed = tpg.eigenvalues_closed_form(spec, (k, r), qs)
                    status = "closed form agrees" if closed == rho \
                        else "CLOSED FORM MISMATCH"
                except tpg.UnsupportedRegimeError:
                    status = "recursion only"
                print(f"\n{family} l={l} params=({k},{r}) w={w}  [{status}]")
                for node in graph.nodes:
                    sign = "+" if node.parity > 0 else "-"
                    nu = "(" + ",".join(str(c) for c in node.nu) + ")"
                    print(f"  {nu:18s} {sign}  {format_scalar(rho[node.nu])}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="a2even",
                    choices=("a2even", "a2odd", "d2"))
    ap.add_argument("--lmax", default=4, type=int)
    ap.add_argument("--w", default="3/2", type=Fraction)
    args = ap.parse_args()
    sweep(args.family, args.lmax, args.w)
