"""Unique perfect matching via Kotzig's theorem.

A connected graph with a unique perfect matching has a bridge in that matching.
So we repeatedly take a bridge e of some component and delete it.  If both
sides are odd, e must be matched: its endpoints leave the graph together with
all their edges.  If both sides are even, e is in no perfect matching and is
dropped.  A component with no bridge, or of odd size, ends the search.

Parallel edges are distinct edges, so a doubled K2 has two perfect matchings.
"""

from dataclasses import dataclass

from .bridge_connectivity import BridgeConnectivity


@dataclass(frozen=True)
class MatchingVerdict:
    unique: bool
    matching: frozenset | None = None   # edge indices into g.edges, iff unique
    detail: str = ""                    # why it is not unique


def unique_perfect_matching(g):
    n = g.n
    if n == 0:
        return MatchingVerdict(True, frozenset())
    if n % 2:
        return MatchingVerdict(False, detail="odd number of vertices")
    G = BridgeConnectivity(n)
    inc = [dict() for _ in range(n)]
    index = {}
    for k, (u, v) in enumerate(g.edges):
        if u == v:
            continue   # a self-loop is never in a matching
        e = G.insert(u, v)
        index[e.id] = k
        inc[u][e.id] = e
        inc[v][e.id] = e

    def drop(e):
        del inc[e.u][e.id]
        del inc[e.v][e.id]
        G.delete(e)

    matched = [False] * n
    out = []
    for v in range(n):
        while not matched[v]:
            if G.size(v) % 2:
                return MatchingVerdict(False, detail="odd component")
            e = G.find_bridge(v)
            if e is None:
                return MatchingVerdict(False, detail="bridgeless component")
            x, y = e.u, e.v
            drop(e)
            if G.size(x) % 2:
                out.append(index[e.id])
                matched[x] = matched[y] = True
                for z in (x, y):
                    for f in list(inc[z].values()):
                        drop(f)
    return MatchingVerdict(True, frozenset(out))


def perfect_matchings(g):
    """Yield every perfect matching as a frozenset of edge indices."""
    n = g.n
    inc = [[] for _ in range(n)]
    for k, (u, v) in enumerate(g.edges):
        if u != v:
            inc[u].append((v, k))
            inc[v].append((u, k))
    used = [False] * n
    chosen = []

    def rec():
        v = next((x for x in range(n) if not used[x]), None)
        if v is None:
            yield frozenset(chosen)
            return
        used[v] = True
        for w, k in inc[v]:
            if not used[w]:
                used[w] = True
                chosen.append(k)
                yield from rec()
                chosen.pop()
                used[w] = False
        used[v] = False

    yield from rec()


def enumerate_perfect_matchings(g):
    """Number of perfect matchings, by backtracking.  Meant for small n."""
    return sum(1 for _ in perfect_matchings(g))
