"""Dinic max-flow and feasible flow under arc lower bounds.

Integer capacities in, integer flows out, polynomial worst case. That is the
entire contract the factor solver needs from this layer.
"""

from __future__ import annotations

from collections import deque

from .errors import InputError


class Dinic:
    """Max-flow via level graphs and blocking flows.

    Edges are stored in a flat array with the reverse edge at index eid ^ 1,
    so the flow pushed through edge eid is simply the residual capacity of
    its twin.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        if cap < 0:
            raise InputError(f"negative capacity {cap} on arc ({u}, {v})")
        eid = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.head[u].append(eid)
        self.to.append(u)
        self.cap.append(0)
        self.head[v].append(eid + 1)
        return eid

    def flow_on(self, eid: int) -> int:
        return self.cap[eid ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for eid in self.head[v]:
                w = self.to[eid]
                if self.cap[eid] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue.append(w)
        return level if level[t] >= 0 else None

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # Walk one s-t path in the level graph (iterative, so deep networks
        # cannot hit the recursion limit), push the bottleneck, return it.
        path: list[int] = []
        v = s
        while True:
            if v == t:
                pushed = min(self.cap[eid] for eid in path)
                for eid in path:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                return pushed
            advanced = False
            while it[v] < len(self.head[v]):
                eid = self.head[v][it[v]]
                w = self.to[eid]
                if self.cap[eid] > 0 and level[w] == level[v] + 1:
                    path.append(eid)
                    v = w
                    advanced = True
                    break
                it[v] += 1
            if not advanced:
                level[v] = -1
                if not path:
                    return 0
                eid = path.pop()
                v = self.to[eid ^ 1]
                it[v] += 1

    def max_flow(self, s: int, t: int) -> int:
        if s == t:
            raise InputError("source and sink must differ")
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._augment(s, t, level, it)
                if pushed == 0:
                    break
                total += pushed


def feasible_flow(
    num_nodes: int,
    arcs: list[tuple[int, int, int, int]],
    source: int,
    sink: int,
) -> list[int] | None:
    """Find an integral source->sink flow meeting per-arc [lower, upper] bounds.

    arcs is a list of (u, v, lower, upper). Returns the flow value of each arc
    in input order, or None when no feasible flow exists. Uses the usual
    reduction: subtract lower bounds, route the resulting node imbalances
    through a super source/sink, and close the circulation with a sink->source
    arc of unbounded capacity.
    """
    for u, v, lo, up in arcs:
        if not (0 <= lo <= up):
            raise InputError(f"arc ({u}, {v}) has invalid bounds [{lo}, {up}]")

    super_s = num_nodes
    super_t = num_nodes + 1
    net = Dinic(num_nodes + 2)

    arc_ids = []
    imbalance = [0] * num_nodes
    for u, v, lo, up in arcs:
        arc_ids.append(net.add_edge(u, v, up - lo))
        imbalance[v] += lo
        imbalance[u] -= lo
    big = sum(up for _, _, _, up in arcs) + 1
    net.add_edge(sink, source, big)

    need = 0
    for v, bal in enumerate(imbalance):
        if bal > 0:
            net.add_edge(super_s, v, bal)
            need += bal
        elif bal < 0:
            net.add_edge(v, super_t, -bal)

    if net.max_flow(super_s, super_t) != need:
        return None
    return [lo + net.flow_on(eid) for eid, (_, _, lo, _) in zip(arc_ids, arcs)]
