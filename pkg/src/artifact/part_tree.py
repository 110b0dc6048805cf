"""Part lists: key-ordered (key, partsize, diagsize) triples.

Keys are cover levels in -1..lmax, so a list never has more than lmax + 2
entries and a linear scan beats any balanced tree at this size.  Lists are
immutable tuples; split and concat share the untouched tail, and the empty
list is ().  Vectors are packed ints, so sums are integer additions.
"""


def part_split(t, pivot):
    """(entries with key <= pivot, entries with key > pivot)."""
    for k, node in enumerate(t):
        if node[0] > pivot:
            return t[:k], t[k:]
    return t, ()


def part_concat(a, b):
    """Join two key-disjoint lists, whichever order their ranges come in."""
    if not a:
        return b
    if not b:
        return a
    if a[-1][0] < b[0][0]:
        return a + b
    if b[-1][0] < a[0][0]:
        return b + a
    raise ValueError("part lists overlap in key range")


def part_range_sum(t, lo, hi):
    """(sum of partsize, sum of diagsize) over keys in [lo, hi]."""
    p = d = 0
    for key, ps, ds in t:
        if key > hi:
            break
        if key >= lo:
            p += ps
            d += ds
    return p, d


def part_get(t, key):
    for node in t:
        if node[0] == key:
            return node[1], node[2]
        if node[0] > key:
            break
    return 0, 0


def part_single(key, size, diag):
    return ((key, size, diag),) if size else ()
