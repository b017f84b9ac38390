"""
hypercut Flow Network
=====================
Dinitz max-flow on an adjacency-list residual graph: BFS level graph,
DFS blocking flow with current-arc pointers, then residual reachability
for the min cut.
"""

from collections import deque
from typing import List, Set


class FlowNetwork:
    """Directed network with integer capacities on nodes ``0..size-1``."""

    def __init__(self, size: int):
        self.size = size
        self.head: List[int] = []
        self.cap: List[int] = []
        self.out: List[List[int]] = [[] for _ in range(size)]

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        """Add u -> v and its zero-capacity twin; returns the forward arc id."""
        arc = len(self.head)
        self.head.extend((v, u))
        self.cap.extend((capacity, 0))
        self.out[u].append(arc)
        self.out[v].append(arc + 1)
        return arc

    def _levels(self, source: int, sink: int) -> List[int]:
        level = [-1] * self.size
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.out[u]:
                v = self.head[arc]
                if self.cap[arc] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _blocking_flow(self, source: int, sink: int, level: List[int], limit: int) -> int:
        pointer = [0] * self.size
        total = 0
        while total < limit:
            # Iterative DFS along the level graph.
            path: List[int] = []
            u = source
            while u != sink:
                arcs = self.out[u]
                advanced = False
                while pointer[u] < len(arcs):
                    arc = arcs[pointer[u]]
                    v = self.head[arc]
                    if self.cap[arc] > 0 and level[v] == level[u] + 1:
                        path.append(arc)
                        u = v
                        advanced = True
                        break
                    pointer[u] += 1
                if advanced:
                    continue
                if not path:
                    return total
                # Dead end: retreat and skip the arc that led here.
                level[u] = -1
                arc = path.pop()
                u = self.head[arc ^ 1]
                pointer[u] += 1
            push = min(min(self.cap[arc] for arc in path), limit - total)
            for arc in path:
                self.cap[arc] -= push
                self.cap[arc ^ 1] += push
            total += push
        return total

    def max_flow(self, source: int, sink: int, limit: int) -> int:
        """Flow value, stopping early once it reaches ``limit``."""
        flow = 0
        while flow < limit:
            level = self._levels(source, sink)
            if level[sink] < 0:
                break
            flow += self._blocking_flow(source, sink, level, limit - flow)
        return flow

    def reachable(self, source: int) -> Set[int]:
        """Nodes reachable from ``source`` through arcs with spare capacity."""
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.out[u]:
                v = self.head[arc]
                if self.cap[arc] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen
