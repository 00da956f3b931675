"""Order-between-vertices (ORD) on line graphs, and its two gadget reductions.

``ord_to_proof_pair`` turns a line into a stack of exchange rules over the
four-atom chain proof; ``ord_to_bdt_pair`` turns it into two free BDTs built
from three copies of the line.  In both cases the produced pair is equivalent
exactly when ``f`` comes before ``s``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .bdt import BDT, Leaf, Node, ONE
from .errors import GraphError
from .proof import Proof, ax, ex, imp_l

VERTEX_RE = re.compile(r"[A-Za-z0-9_]+")
TOP_VARS = ("x", "y")


@dataclass(frozen=True)
class LineGraph:
    vertices: frozenset
    edges: frozenset  # of (u, v)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        self.order()  # validates

    def order(self) -> list:
        """Vertices in line order, begin first; raises unless the graph is a line."""
        V, E = self.vertices, self.edges
        if not V:
            raise GraphError("empty graph")
        succ, pred = {}, {}
        for u, v in E:
            if u not in V or v not in V:
                raise GraphError(f"edge {u} -> {v} mentions an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop on {u}")
            if u in succ:
                raise GraphError(f"vertex {u} has out-degree > 1")
            if v in pred:
                raise GraphError(f"vertex {v} has in-degree > 1")
            succ[u], pred[v] = v, u
        begins = [v for v in V if v not in pred]
        if len(begins) != 1:
            raise GraphError(f"a line has exactly one begin vertex, found {len(begins)}")
        out = [begins[0]]
        while out[-1] in succ:
            out.append(succ[out[-1]])
        if len(out) != len(V):
            raise GraphError("graph is not connected as a single line")
        return out

    @property
    def begin(self):
        return self.order()[0]

    @property
    def exit(self):
        return self.order()[-1]

    @classmethod
    def from_order(cls, order):
        return cls(frozenset(order), frozenset(zip(order, order[1:])))


@dataclass(frozen=True)
class OrdInstance:
    graph: LineGraph
    f: str
    s: str

    def __post_init__(self):
        V = self.graph.vertices
        if self.f not in V or self.s not in V:
            raise GraphError(f"f={self.f!r} and s={self.s!r} must be vertices of the line")
        if self.f == self.s:
            raise GraphError("f and s must differ")


def parse_line_graph(text: str, source=None) -> LineGraph:
    """One ``u -> v`` edge per line; blank lines and ``#`` comments are skipped."""
    vertices, edges = set(), set()
    where = f"{source}:" if source else ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [w.strip() for w in line.split("->")]
        if len(parts) != 2 or not all(VERTEX_RE.fullmatch(w) for w in parts):
            raise GraphError(f"{where}{lineno}: expected 'u -> v', got {raw.strip()!r}")
        u, v = parts
        vertices |= {u, v}
        edges.add((u, v))
    return LineGraph(frozenset(vertices), frozenset(edges))


def show_line_graph(g: LineGraph) -> str:
    order = g.order()
    return "\n".join(f"{u} -> {v}" for u, v in zip(order, order[1:]))


def ord_solve(inst: OrdInstance) -> bool:
    for v in inst.graph.order():
        if v == inst.f:
            return True
        if v == inst.s:
            return False
    raise GraphError("unreachable: f and s are vertices of the line")


# -- reduction to proof equivalence ----------------------------------------

def pi_zero() -> Proof:
    """``a, (a -o a), (a -o a), (a -o a) |- a`` by three impL over axioms."""
    p = imp_l(ax("a"), ax("a"))
    p = imp_l(p, ax("a"))
    return imp_l(p, ax("a"))


def ord_to_proof_pair(inst: OrdInstance) -> tuple[Proof, Proof]:
    order = inst.graph.order()
    if order[0] in (inst.f, inst.s):
        raise GraphError("the begin vertex must differ from f and s")
    p = pi_zero()
    for v in order[1:]:
        if v == inst.f:
            p = ex(2, 3, p)
        elif v == inst.s:
            p = ex(3, 4, p)
        else:
            p = ex(1, 2, ex(1, 2, p))
    reference = ex(3, 4, ex(2, 3, pi_zero()))
    return p, reference


# -- reduction to BDT equivalence ------------------------------------------

# copy -> copy followed when leaving f resp. s in the rewired graph
SIGMA_F = {1: 2, 2: 3, 3: 1}
SIGMA_S = {1: 2, 2: 1, 3: 3}
EXIT_VALUE = {1: 1, 2: 0, 3: 0}


def _copy_tree(order, start_copy, rewire, f, s) -> BDT:
    # built from the exit backwards: a vertex's subtree depends on the copy it sits in
    subtree = {c: Leaf(EXIT_VALUE[c]) for c in (1, 2, 3)}
    for v in reversed(order[:-1]):
        nxt = subtree
        subtree = {}
        for c in (1, 2, 3):
            target = c
            if rewire and v == f:
                target = SIGMA_F[c]
            elif rewire and v == s:
                target = SIGMA_S[c]
            subtree[c] = Node(v, nxt[target], ONE)
    return subtree[start_copy]


def ord_to_bdt_pair(inst: OrdInstance) -> tuple[BDT, BDT]:
    """``(rewired, plain)`` trees; they are equivalent iff ``f`` precedes ``s``."""
    order = inst.graph.order()
    if order[0] in (inst.f, inst.s) or order[-1] in (inst.f, inst.s):
        raise GraphError("begin and exit vertices must differ from f and s")
    clash = set(TOP_VARS) & inst.graph.vertices
    if clash:
        raise GraphError(f"vertex names {sorted(clash)} are reserved for the top gadget")
    x, y = TOP_VARS

    def build(rewire):
        copy = {c: _copy_tree(order, c, rewire, inst.f, inst.s) for c in (1, 2, 3)}
        return Node(x, copy[3], Node(y, copy[2], copy[1]))

    return build(True), build(False)


def all_instances(n: int):
    """Every valid (f, s) placement on the line ``v1 -> ... -> vn``."""
    order = [f"v{i}" for i in range(1, n + 1)]
    g = LineGraph.from_order(order)
    for f in order[1:-1]:
        for s in order[1:-1]:
            if f != s:
                yield OrdInstance(g, f, s)
