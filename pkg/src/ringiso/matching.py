"""Maximum bipartite matching via Hopcroft-Karp layering.

Deterministic: rows are scanned in increasing index and adjacency lists are
visited in the given (ascending) order, so identical inputs always produce
the identical matching.
"""

from __future__ import annotations

from collections import deque
from typing import List, Sequence

_INF = -1


def maximum_bipartite_matching(adjacency: Sequence[Sequence[int]], n_right: int) -> List[int]:
    """Match left vertices to right vertices.

    adjacency[i] lists the right neighbours of left vertex i (ascending).
    Returns match_left with match_left[i] = matched right vertex or -1.
    """
    n_left = len(adjacency)
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            if found != _INF and dist[u] >= found:
                continue
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    if found == _INF:
                        found = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found != _INF

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == -1:
                dfs(u)
    return match_left
