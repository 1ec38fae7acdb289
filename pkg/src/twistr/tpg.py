"""Extended twisted tensor-product graphs and spectral eigenvalues.

A graph node is one fixed-subalgebra component V0(nu) of the tensor product;
it carries the Casimir eigenvalue C(nu) = (nu, nu + 2*rho0), a parity epsilon
in {+1, -1} and the L-parent identifier.  Two nodes are joined by an edge iff

* containment: V0(nu') occurs in V0(theta0) (x) V0(nu), and
* parity rule: epsilon_nu * epsilon_nu' = +1 when the nodes share an L-parent
  and -1 otherwise.

Parities are constant on L-parent classes and flip across every containment
edge between different classes, so they are found by 2-coloring the parent
quotient graph, anchored at the top component (parity +1).

Eigenvalues rho_nu(u) follow from the edge recursion

    rho_nu = <(C(nu') - C(nu)) / 2>_{eps_nu * eps_nu'} * rho_nu'

propagated over a spanning tree from the top node; every non-tree edge yields
a loop-consistency certificate which is verified exactly in Q(u).  The
per-family closed-form products are provided as independent regression
targets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import branching
from .branching import (BranchingError, contains_in_theta_tensor,
                        decompose_tensor_closed_form)
from .liealg import FamilySpec, casimir_eigenvalue
from .scalars import QSample, RatFun, bracket, format_scalar

Q = Fraction


class GraphError(RuntimeError):
    pass


class UnsupportedRegimeError(ValueError):
    """The closed form does not cover this parameter regime."""


@dataclass(frozen=True)
class TPGNode:
    nu: tuple
    casimir: Fraction
    parity: int
    parent: tuple


@dataclass(frozen=True)
class TPGraph:
    spec: FamilySpec
    params: tuple
    nodes: tuple          # TPGNode, sorted by nu descending
    edges: tuple          # ((nu_a, nu_b), sign) with nu_a > nu_b
    top: tuple            # nu of the top (anchor) node

    def node(self, nu):
        for n in self.nodes:
            if n.nu == tuple(nu):
                return n
        raise KeyError(nu)

    def neighbours(self, nu):
        out = []
        for (a, b), sign in self.edges:
            if a == nu:
                out.append((b, sign))
            elif b == nu:
                out.append((a, sign))
        return out


def build_graph(spec: FamilySpec, params) -> TPGraph:
    table = decompose_tensor_closed_form(spec, params)
    parents = {c.nu: c.parent for c in table.components}
    nus = [c.nu for c in table.components]
    top = branching.top_weight(spec, params)
    if top not in parents:
        raise GraphError(f"top weight {top} missing from the decomposition")

    contained = []
    for i, nu in enumerate(nus):
        for nup in nus[i + 1:]:
            if contains_in_theta_tensor(spec, nu, nup):
                contained.append((nu, nup))

    parity = _color_parent_classes(parents, contained, parents[top])

    edges = []
    for nu, nup in contained:
        same_parent = parents[nu] == parents[nup]
        sign = parity[nu] * parity[nup]
        if same_parent and sign == 1:
            edges.append(((nu, nup), 1))
        elif not same_parent and sign == -1:
            edges.append(((nu, nup), -1))
        elif same_parent:
            raise GraphError(
                f"parent class of {nu} received inconsistent parities")
        # different parent with equal parity: containment without an edge
    edges.sort(key=lambda e: e[0])

    nodes = tuple(TPGNode(nu, casimir_eigenvalue(spec, nu), parity[nu], parents[nu])
                  for nu in nus)
    graph = TPGraph(spec, tuple(params), nodes, tuple(edges), top)
    _check_connected(graph)
    return graph


def _color_parent_classes(parents, contained, top_parent):
    """2-color the quotient graph on L-parent classes; returns {nu: parity}."""
    adj = {}
    for nu, nup in contained:
        p, pp = parents[nu], parents[nup]
        if p != pp:
            adj.setdefault(p, set()).add(pp)
            adj.setdefault(pp, set()).add(p)
    color = {top_parent: 1}
    frontier = [top_parent]
    while frontier:
        nxt = []
        for p in frontier:
            for pp in sorted(adj.get(p, ())):
                if pp in color:
                    if color[pp] != -color[p]:
                        raise GraphError(
                            "parent quotient graph is not bipartite")
                else:
                    color[pp] = -color[p]
                    nxt.append(pp)
        frontier = nxt
    missing = {p for p in parents.values()} - set(color)
    if missing:
        raise GraphError(f"parent classes unreachable from the top: {missing}")
    return {nu: color[p] for nu, p in parents.items()}


def _check_connected(graph: TPGraph):
    seen = {graph.top}
    frontier = [graph.top]
    while frontier:
        nxt = []
        for nu in frontier:
            for other, _ in graph.neighbours(nu):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    if len(seen) != len(graph.nodes):
        raise GraphError("extended graph is disconnected")


# ---------------------------------------------------------------------------
# Eigenvalues by recursion over the graph
# ---------------------------------------------------------------------------

def edge_bracket(graph: TPGraph, nu_from, nu_to, qs: QSample, u):
    """The factor relating rho_{nu_to} = factor * rho_{nu_from}."""
    sign = graph.node(nu_from).parity * graph.node(nu_to).parity
    a = (graph.node(nu_from).casimir - graph.node(nu_to).casimir) / 2
    return bracket(a, sign, u, qs)


def eigenvalues_by_recursion(graph: TPGraph, qs: QSample, u=None):
    """Propagate the recursion from the top node over a spanning tree.

    With u omitted the result lives in Q(u) (RatFun); otherwise u must be a
    rational sample.  Returns (rho, certificates): rho maps nu -> eigenvalue,
    and certificates lists one consistency record per non-tree edge.
    """
    if u is None:
        u = RatFun.var()
    one = RatFun.const(1) if isinstance(u, RatFun) else Q(1)
    rho = {graph.top: one}
    tree_edges = set()
    frontier = [graph.top]
    while frontier:
        nxt = []
        for nu in frontier:
            for other, _ in graph.neighbours(nu):
                if other in rho:
                    continue
                rho[other] = edge_bracket(graph, nu, other, qs, u) * rho[nu]
                tree_edges.add(frozenset((nu, other)))
                nxt.append(other)
        frontier = nxt
    if len(rho) != len(graph.nodes):
        raise GraphError("recursion did not reach every node")
    certificates = []
    for (a, b), _ in graph.edges:
        if frozenset((a, b)) in tree_edges:
            continue
        implied = edge_bracket(graph, a, b, qs, u) * rho[a]
        certificates.append({
            "edge": (a, b),
            "consistent": implied == rho[b],
        })
    bad = [c for c in certificates if not c["consistent"]]
    if bad:
        raise GraphError(f"recursion is path-dependent on edges {bad}")
    return rho, certificates


# ---------------------------------------------------------------------------
# Closed-form eigenvalue products
# ---------------------------------------------------------------------------

def eigenvalues_closed_form(spec: FamilySpec, params, qs: QSample, u=None):
    """Family closed forms for rho_nu(u); raises UnsupportedRegimeError where
    no closed form applies (the so(2l+1)-in-sl(2l+1) family with k + r > l)."""
    if u is None:
        u = RatFun.var()
    k, r = params
    l, n = spec.l, spec.n
    if not spec.admissible(params) or k > r:
        raise BranchingError(f"inadmissible weights {params}")
    out = {}
    if spec.family == "a2even":
        if k + r > l:
            raise UnsupportedRegimeError(
                "closed form for this family needs k + r <= l")
        for a in range(k + 1):
            for c in range(a + 1):
                nu = branching._lam_cd(l, c, k + r - 2 * a + c)
                val = 1 if not isinstance(u, RatFun) else RatFun.const(1)
                for i in range(a, k):
                    val = val * bracket(Q(k + r - 2 * i), -1, u, qs)
                for j in range(1, a - c + 1):
                    val = val * bracket(Q(n - r - k + 2 * j), +1, u, qs)
                out[nu] = val
    elif spec.family == "a2odd":
        for a in range(k + 1):
            b = k + r - 2 * a
            for c in range(a + 1):
                nu = tuple(Q(b + c) if i == 0 else (Q(c) if i == 1 else Q(0))
                           for i in range(l))
                val = 1 if not isinstance(u, RatFun) else RatFun.const(1)
                for i in range(1, a - c + 1):
                    val = val * bracket(Q(n + k + r - 2 * i), +1, u, qs)
                for j in range(1, a + 1):
                    val = val * bracket(Q(k + r + 2 - 2 * j), -1, u, qs)
                out[nu] = val
    else:
        a, b = k, r
        shift = Q(b - a, 2)
        for Lam in branching._ladders(l, a):
            nu = tuple(Q(x) + shift for x in Lam)
            val = 1 if not isinstance(u, RatFun) else RatFun.const(1)
            for i in range(1, l + 1):
                for kk in range(Lam[i - 1], a):
                    sign = -1 if (l + i) % 2 == 0 else 1
                    val = val * bracket(Q(kk - i + l + 1) + shift, sign, u, qs)
            out[nu] = val
    return out


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def _weight_str(nu):
    return "(" + ",".join(str(c) for c in nu) + ")"


def graph_as_dict(graph: TPGraph):
    return {
        "family": graph.spec.family,
        "l": graph.spec.l,
        "params": list(graph.params),
        "top": _weight_str(graph.top),
        "nodes": [
            {
                "weight": _weight_str(n.nu),
                "casimir": format_scalar(n.casimir),
                "parity": n.parity,
                "parent": _weight_str(n.parent[1:]),
                "dim": d,
            }
            for n, d in zip(graph.nodes, _node_dims(graph))
        ],
        "edges": [
            {"a": _weight_str(a), "b": _weight_str(b), "sign": sign}
            for (a, b), sign in graph.edges
        ],
    }


def _node_dims(graph: TPGraph):
    table = decompose_tensor_closed_form(graph.spec, graph.params)
    dims = {c.nu: c.dim for c in table.components}
    return [dims[n.nu] for n in graph.nodes]


def export_graph(graph: TPGraph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(graph_as_dict(graph), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        lines = ["graph tpg {"]
        for n, d in zip(graph.nodes, _node_dims(graph)):
            sign = "+" if n.parity > 0 else "-"
            lines.append(
                f'  "{_weight_str(n.nu)}" '
                f'[label="{_weight_str(n.nu)}\\n{sign} dim={d} C={n.casimir}"];')
        for (a, b), sign in graph.edges:
            style = "solid" if sign > 0 else "dashed"
            lines.append(
                f'  "{_weight_str(a)}" -- "{_weight_str(b)}" [style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = [f"extended twisted TPG {graph.spec.family} l={graph.spec.l} "
                 f"params={list(graph.params)}"]
        for n, d in zip(graph.nodes, _node_dims(graph)):
            sign = "+" if n.parity > 0 else "-"
            lines.append(f"  node {_weight_str(n.nu)} parity={sign} dim={d} "
                         f"C={n.casimir} parent={_weight_str(n.parent[1:])}")
        for (a, b), sign in graph.edges:
            lines.append(f"  edge {_weight_str(a)} -- {_weight_str(b)} "
                         f"sign={'+' if sign > 0 else '-'}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
