""" Maximum bipartite matching by Hopcroft-Karp """
import collections

UNREACHED = -1


class HopcroftKarp(object):
    """ Maximum matching of a bipartite graph given as left vertex -> right neighbours.

    Neighbour lists are scanned in the order given, so the matching found is
    the same on every run.

    >>> HopcroftKarp({'x': ['a', 'b'], 'y': ['a']}).maximum_matching_size()
    2
    """

    def __init__(self, graph_left):
        self._graph = collections.OrderedDict((u, list(vs)) for u, vs in graph_left.items())
        self._left = list(self._graph)
        self._pair_left = {}
        self._pair_right = {}
        self._dist = {}
        self._limit = UNREACHED

    def _bfs(self):
        queue = collections.deque()
        for u in self._left:
            if u in self._pair_left:
                self._dist[u] = UNREACHED
            else:
                self._dist[u] = 0
                queue.append(u)
        self._limit = UNREACHED
        while queue:
            u = queue.popleft()
            if self._limit != UNREACHED and self._dist[u] >= self._limit:
                continue
            for v in self._graph[u]:
                if v not in self._pair_right:
                    if self._limit == UNREACHED:
                        self._limit = self._dist[u] + 1
                else:
                    other = self._pair_right[v]
                    if self._dist[other] == UNREACHED:
                        self._dist[other] = self._dist[u] + 1
                        queue.append(other)
        return self._limit != UNREACHED

    def _dfs(self, u):
        for v in self._graph[u]:
            if v not in self._pair_right:
                if self._limit == self._dist[u] + 1:
                    self._pair_left[u], self._pair_right[v] = v, u
                    return True
            else:
                other = self._pair_right[v]
                if self._dist[other] == self._dist[u] + 1 and self._dfs(other):
                    self._pair_left[u], self._pair_right[v] = v, u
                    return True
        self._dist[u] = UNREACHED
        return False

    def maximum_matching(self):
        """ Returns:
                dict: left vertex -> matched right vertex.
        """
        self._pair_left.clear()
        self._pair_right.clear()
        while self._bfs():
            for u in self._left:
                if u not in self._pair_left:
                    self._dfs(u)
        return dict(self._pair_left)

    def maximum_matching_size(self):
        return len(self.maximum_matching())
