"""Two-colour digraphs of (0,1,-1)-matrices and the PT-graph taxonomy.

A blue arc (i, j) records a +1 in position (i, j) and a red arc a -1.
Vertices are 0-based.  ``classify`` sorts a PT-graph into its type and
extracts the parameters of the matching standard form (see
``ptasm.forms.standard_matrix``); when only the reversed graph fits the
standard form, ``Classification.transposed`` is set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .forms import PTType
from .matrix import IntMatrix


@dataclass(frozen=True)
class PTGraph:
    n: int
    blue: frozenset[tuple[int, int]]
    red: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.blue & self.red:
            raise ValueError("an arc cannot be both blue and red")

    def out_arcs(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> [(head, sign)] with sign +1 for blue, -1 for red."""
        out: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for u, v in sorted(self.blue):
            out[u].append((v, 1))
        for u, v in sorted(self.red):
            out[u].append((v, -1))
        return out


def build_graph(a: IntMatrix) -> PTGraph:
    if not a.is_signed01():
        raise ValueError("graph construction needs a (0,1,-1)-matrix")
    return PTGraph(a.n, frozenset(a.entries(1)), frozenset(a.entries(-1)))


def graph_matrix(g: PTGraph) -> IntMatrix:
    """The matrix of ``g`` under the vertex order 0..n-1."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.blue:
        rows[u][v] = 1
    for u, v in g.red:
        rows[u][v] = -1
    return IntMatrix(rows)


def reverse_graph(g: PTGraph) -> PTGraph:
    return PTGraph(
        g.n,
        frozenset((v, u) for u, v in g.blue),
        frozenset((v, u) for u, v in g.red),
    )


def weak_components(g: PTGraph) -> list[list[int]]:
    """Connected components of the underlying undirected graph, sorted."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.blue | g.red:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, list[int]] = defaultdict(list)
    for x in range(g.n):
        comps[find(x)].append(x)
    return sorted(comps.values())


def signed_walk_counts(g: PTGraph, u: int, v: int, k: int) -> tuple[int, int]:
    """(positive, negative) k-walks from u to v; negative = odd number of red arcs."""
    if k < 1:
        raise ValueError("walk length must be positive")
    out = g.out_arcs()
    # counts[x] = [even-parity walks ending at x, odd-parity walks ending at x]
    counts = {u: [1, 0]}
    for _ in range(k):
        nxt: dict[int, list[int]] = defaultdict(lambda: [0, 0])
        for x, (even, odd) in counts.items():
            for y, sign in out.get(x, ()):
                if sign == 1:
                    nxt[y][0] += even
                    nxt[y][1] += odd
                else:
                    nxt[y][0] += odd
                    nxt[y][1] += even
        counts = nxt
    even, odd = counts.get(v, [0, 0])
    return even, odd


def to_dot(g: PTGraph, name: str = "PT") -> str:
    """DOT text: blue arcs solid, red arcs dashed; vertices labelled 1..n."""
    lines = [f"digraph {name} {{"]
    for x in range(g.n):
        lines.append(f"  v{x + 1} [label=\"{x + 1}\"];")
    for u, v in sorted(g.blue):
        lines.append(f"  v{u + 1} -> v{v + 1} [color=blue, style=solid];")
    for u, v in sorted(g.red):
        lines.append(f"  v{u + 1} -> v{v + 1} [color=red, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Classification:
    type_tag: PTType
    params: tuple[int, ...] = ()
    transposed: bool = False
    cycle_lengths: tuple[int, ...] = ()
    satellites: tuple[int, ...] = ()
    component: tuple[int, ...] = ()
    inner: Classification | None = None
    reason: str = ""

    @property
    def elementary(self) -> Classification:
        """The classification of the T-component (self unless non-elementary)."""
        return self.inner if self.inner is not None else self

    def to_json(self) -> dict:
        out = {
            "type": self.type_tag.value,
            "params": list(self.params),
            "transposed": self.transposed,
            "cycle_lengths": list(self.cycle_lengths),
        }
        if self.type_tag is PTType.NON_ELEMENTARY:
            out["component"] = [v + 1 for v in self.component]
            out["satellites"] = list(self.satellites)
            out["inner"] = self.inner.to_json() if self.inner else None
        if self.reason:
            out["reason"] = self.reason
        return out


class _Cycles:
    """Cycle structure of the permutation part, with distances along arcs."""

    def __init__(self, succ: list[int]):
        self.succ = succ
        self.cycle_of = [-1] * len(succ)
        self.index_in = [0] * len(succ)
        self.lengths: list[int] = []
        for start in range(len(succ)):
            if self.cycle_of[start] >= 0:
                continue
            c = len(self.lengths)
            x, k = start, 0
            while self.cycle_of[x] < 0:
                self.cycle_of[x] = c
                self.index_in[x] = k
                x = succ[x]
                k += 1
            self.lengths.append(k)

    def length(self, x: int) -> int:
        return self.lengths[self.cycle_of[x]]

    def dist(self, x: int, y: int) -> int:
        """Number of permutation arcs from x forward to y (same cycle)."""
        assert self.cycle_of[x] == self.cycle_of[y]
        return (self.index_in[y] - self.index_in[x]) % self.length(x)

    def pos_first(self, anchor: int, y: int) -> int:
        """1-based position of y when the cycle is listed against its arcs from anchor."""
        return (-self.dist(anchor, y)) % self.length(anchor) + 1

    def pos_last(self, anchor: int, y: int) -> int:
        """1-based position of y when the listing against the arcs ends at anchor."""
        return self.length(anchor) - self.dist(anchor, y)


def _not_pt(reason: str) -> Classification:
    return Classification(PTType.NOT_PT, reason=reason)


def classify(g: PTGraph) -> Classification:
    if not g.red:
        succ: dict[int, int] = {}
        pred: set[int] = set()
        for u, v in g.blue:
            if u in succ or v in pred:
                return _not_pt("blue arcs do not form a permutation")
            succ[u] = v
            pred.add(v)
        if len(succ) != g.n:
            return _not_pt("blue arcs do not form a permutation")
        cyc = _Cycles([succ[x] for x in range(g.n)])
        return Classification(PTType.PERMUTATION, cycle_lengths=tuple(sorted(cyc.lengths, reverse=True)))
    if len(g.red) != 2:
        return _not_pt(f"{len(g.red)} red arcs (need 0 or 2)")
    (u1, v1), (u2, v2) = sorted(g.red)
    if u1 == u2 or v1 == v2:
        return _not_pt("red arcs share a row or column")
    t_blue = {(u1, v2), (u2, v1)}
    if not t_blue <= g.blue:
        return _not_pt("red arcs are not completed by a T-block")
    succ_list: list[int | None] = [None] * g.n
    indeg = [0] * g.n
    for u, v in g.blue - t_blue:
        if succ_list[u] is not None:
            return _not_pt("permutation part has a vertex of out-degree 2")
        succ_list[u] = v
        indeg[v] += 1
    if any(s is None for s in succ_list) or any(d != 1 for d in indeg):
        return _not_pt("permutation part is not a union of disjoint cycles")
    cyc = _Cycles(succ_list)  # type: ignore[arg-type]
    lengths = tuple(sorted(cyc.lengths, reverse=True))

    t_cycles = {cyc.cycle_of[x] for x in (u1, u2, v1, v2)}
    if len(t_cycles) < len(cyc.lengths):
        return _non_elementary(g, cyc, t_cycles, lengths)
    return _classify_elementary(g, cyc, (u1, v1, u2, v2), lengths)


def _non_elementary(g: PTGraph, cyc: _Cycles, t_cycles: set[int], lengths) -> Classification:
    comp = tuple(x for x in range(g.n) if cyc.cycle_of[x] in t_cycles)
    relabel = {x: i for i, x in enumerate(comp)}
    sub = PTGraph(
        len(comp),
        frozenset((relabel[u], relabel[v]) for u, v in g.blue if u in relabel),
        frozenset((relabel[u], relabel[v]) for u, v in g.red),
    )
    inner = classify(sub)
    sats = tuple(
        sorted((cyc.lengths[c] for c in range(len(cyc.lengths)) if c not in t_cycles), reverse=True)
    )
    return Classification(
        PTType.NON_ELEMENTARY,
        params=inner.params,
        transposed=inner.transposed,
        cycle_lengths=lengths,
        satellites=sats,
        component=comp,
        inner=inner,
    )


def _classify_elementary(g: PTGraph, cyc: _Cycles, red, lengths) -> Classification:
    u1, v1, u2, v2 = red
    c = cyc.cycle_of
    k = len({c[u1], c[u2], c[v1], c[v2]})

    def done(tag, params, transposed=False):
        return Classification(tag, tuple(params), transposed, lengths)

    if k == 1:
        n = g.n
        options = []
        for a1, b1, a2, b2 in ((u1, v1, u2, v2), (u2, v2, u1, v1)):
            d = cyc.dist(a2, a1)
            if 2 * d <= n:
                options.append((n, d, cyc.pos_first(a1, b2), cyc.pos_first(a1, b1)))
        return done(PTType.TYPE1, min(options, key=lambda t: (t[3], t[2])))

    if k == 4:
        options = [
            (cyc.length(u1), cyc.length(u2), cyc.length(v1), cyc.length(v2)),
            (cyc.length(u2), cyc.length(u1), cyc.length(v2), cyc.length(v1)),
        ]
        return done(PTType.TYPE4, min(options))

    if k == 2:
        if c[u1] == c[u2] and c[v1] == c[v2]:
            return done(PTType.TYPE2C, _params_2c(cyc, u1, v1, u2, v2))
        if c[u1] == c[v2] and c[u2] == c[v1]:
            options = [
                (cyc.length(u1), cyc.length(u2), cyc.pos_first(u1, v2), cyc.pos_first(u2, v1)),
                (cyc.length(u2), cyc.length(u1), cyc.pos_first(u2, v1), cyc.pos_first(u1, v2)),
            ]
            return done(PTType.TYPE2A, min(options))
        if c[u1] == c[v1] and c[u2] == c[v2]:
            options = [
                (cyc.length(u1), cyc.length(u2), cyc.pos_first(u1, v1), cyc.pos_first(u2, v2)),
                (cyc.length(u2), cyc.length(u1), cyc.pos_first(u2, v2), cyc.pos_first(u1, v1)),
            ]
            return done(PTType.TYPE2B, min(options))
        # three T-vertices on one cycle and the fourth alone on the other
        if c[u1] != c[u2]:
            # the lone vertex is a tail; the reversed graph has a lone head
            return _reversed(g)
        return done(PTType.TYPE2D, _params_2d(cyc, u1, v1, u2, v2))

    # k == 3: exactly one pair of T-vertices shares a cycle
    if c[u1] == c[u2]:
        return done(PTType.TYPE3C, _params_3c(cyc, u1, v1, u2, v2))
    if c[v1] == c[v2]:
        return _reversed(g)
    if c[u1] == c[v1] or c[u2] == c[v2]:
        if c[u1] != c[v1]:
            u1, v1, u2, v2 = u2, v2, u1, v1
        return done(PTType.TYPE3B, (cyc.length(u1), cyc.length(u2), cyc.length(v2), cyc.pos_first(u1, v1)))
    if c[u2] == c[v1]:
        u1, v1, u2, v2 = u2, v2, u1, v1
    return done(PTType.TYPE3A, (cyc.length(u1), cyc.length(u2), cyc.length(v1), cyc.pos_first(u1, v2)))


def _reversed(g: PTGraph) -> Classification:
    inner = classify(reverse_graph(g))
    return Classification(
        inner.type_tag, inner.params, not inner.transposed, inner.cycle_lengths, reason=inner.reason
    )


def _params_2c(cyc: _Cycles, u1, v1, u2, v2) -> tuple[int, int, int, int]:
    p, q = cyc.length(u1), cyc.length(v1)
    options = []
    for x1, y1, x2, y2 in ((u1, v1, u2, v2), (u2, v2, u1, v1)):
        h = cyc.dist(x2, x1)
        l = cyc.dist(y2, y1)
        options.append((2 * l > q, h, l))
    _, h, l = min(options)
    return (p, q, h, l)


def _params_2d(cyc: _Cycles, u1, v1, u2, v2) -> tuple[int, int, int, int]:
    # make v2 the head that is alone on its cycle
    if cyc.cycle_of[v1] != cyc.cycle_of[u1] or cyc.cycle_of[v1] != cyc.cycle_of[u2]:
        u1, v1, u2, v2 = u2, v2, u1, v1
    p, q = cyc.length(v1), cyc.length(v2)
    return (p, q, cyc.pos_last(v1, u1), cyc.pos_last(v1, u2))


def _params_3c(cyc: _Cycles, u1, v1, u2, v2) -> tuple[int, int, int, int]:
    p = cyc.length(u1)
    return min(
        (p, cyc.length(v2), cyc.length(v1), cyc.pos_first(u1, u2)),
        (p, cyc.length(v1), cyc.length(v2), cyc.pos_first(u2, u1)),
    )


def classify_matrix(a: IntMatrix) -> Classification:
    if not a.is_signed01():
        return _not_pt("entries outside {-1,0,1}")
    return classify(build_graph(a))
