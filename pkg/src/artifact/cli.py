"""Command line front end.

    artifact run FILE             replay an op file, print query answers
    artifact check [FILE]         replay against the brute-force oracle
    artifact check --random n=128 ops=10000 seed=42
    artifact bench                scaling CSV on doubling n
    artifact matching FILE        unique perfect matching verdict

Op files start with ``n <count>``; every other line is one op:
insert u v, delete u v, delete-id k, conn u v, 2conn u v, bridge v,
bridge2 u v, size v, 2size v.  Blank lines and ``#`` comments are skipped.
``delete-id k`` names the k-th insert (0-based).  Exit codes: 0 ok,
1 divergence in check, 2 usage or parse error.
"""

import argparse
import csv
import random
import sys
import time

from .bridge_connectivity import BridgeConnectivity
from .matching import unique_perfect_matching
from .oracle import SnapshotGraph, bridges, components, two_ecc

ARITY = {
    "insert": 2, "delete": 2, "delete-id": 1,
    "conn": 2, "2conn": 2, "bridge": 1, "bridge2": 2, "size": 1, "2size": 1,
}
QUERIES = {"conn", "2conn", "bridge", "bridge2", "size", "2size"}

BENCH_FIELDS = [
    "n", "ops", "wall_s", "merges", "splits", "covers",
    "merges_per_op", "splits_per_op", "covers_per_op", "us_per_op",
]


class InputError(Exception):
    pass


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_ops(lines):
    """Return (n, [(lineno, op, args)]) from the lines of an op file."""
    n = None
    ops = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if n is None:
            if tok[0] != "n" or len(tok) != 2:
                raise InputError(f"line {lineno}: expected header 'n <count>'")
            (n,) = _ints(tok[1:], lineno)
            if n < 1:
                raise InputError(f"line {lineno}: need n >= 1")
            continue
        op = tok[0]
        if op not in ARITY:
            raise InputError(f"line {lineno}: unknown op {op!r}")
        if len(tok) - 1 != ARITY[op]:
            raise InputError(f"line {lineno}: {op} takes {ARITY[op]} argument(s)")
        args = _ints(tok[1:], lineno)
        if op != "delete-id":
            for x in args:
                if not 0 <= x < n:
                    raise InputError(f"line {lineno}: vertex {x} out of range 0..{n - 1}")
        if op == "insert" and args[0] == args[1]:
            raise InputError(f"line {lineno}: self-loops are not supported")
        ops.append((lineno, op, args))
    if n is None:
        raise InputError("missing header 'n <count>'")
    return n, ops


def random_ops(n, ops, seed, queries=True, density=2):
    """A reproducible mixed workload as (op, args) pairs.

    Inserts dominate until about density * n edges are live, then inserts and
    deletes balance.  With queries on, roughly half the ops are queries.
    """
    rng = random.Random(seed)
    live = []
    inserted = 0
    kinds = sorted(QUERIES)
    for _ in range(ops):
        if n > 1 and (not queries or rng.random() < 0.5):
            p = 0.9 if len(live) < density * n else 0.5
            if live and rng.random() >= p:
                k = live.pop(rng.randrange(len(live)))
                yield "delete-id", [k]
            else:
                u, v = rng.sample(range(n), 2)
                live.append(inserted)
                inserted += 1
                yield "insert", [u, v]
        else:
            op = rng.choice(kinds)
            yield op, [rng.randrange(n) for _ in range(ARITY[op])]


def _fmt_edge(e):
    return f"{e[0]} {e[1]}"


class Session:
    """The dynamic structure plus the bookkeeping the op grammar needs."""

    def __init__(self, n, instrument=False):
        self.G = BridgeConnectivity(n, instrument=instrument)
        self.handles = []          # insertion index -> GraphEdge
        self.pairs = {}            # (min, max) -> {insertion index: None}

    def resolve(self, op, args, lineno=None):
        """Rewrite ``delete u v`` as ``delete-id k`` for a live copy."""
        where = f"line {lineno}: " if lineno is not None else ""
        if op == "delete":
            copies = self.pairs.get((min(args), max(args)))
            if not copies:
                raise InputError(f"{where}no edge {args[0]} {args[1]} to delete")
            return "delete-id", [next(iter(copies))]
        if op == "delete-id":
            k = args[0]
            if not (0 <= k < len(self.handles)) or not self.handles[k].alive:
                raise InputError(f"{where}no live edge with id {k}")
        return op, args

    def apply(self, op, args):
        G = self.G
        if op == "insert":
            u, v = args
            self.pairs.setdefault((min(u, v), max(u, v)), {})[len(self.handles)] = None
            self.handles.append(G.insert(u, v))
            return None
        if op == "delete-id":
            e = self.handles[args[0]]
            del self.pairs[(min(e.u, e.v), max(e.u, e.v))][args[0]]
            G.delete(e)
            return None
        if op == "conn":
            return str(G.connected(*args)).lower()
        if op == "2conn":
            return str(G.two_edge_connected(*args)).lower()
        if op == "bridge":
            e = G.find_bridge(args[0])
            return "none" if e is None else _fmt_edge((e.u, e.v))
        if op == "bridge2":
            if not G.connected(*args):
                return "disconnected"
            e = G.find_bridge(*args)
            return "none" if e is None else _fmt_edge((e.u, e.v))
        if op == "size":
            return str(G.size(args[0]))
        if op == "2size":
            return str(G.two_size(args[0]))
        raise ValueError(op)


class OracleSession:
    """Recomputes every answer from scratch; answers are sets of valid strings."""

    def __init__(self, n):
        self.n = n
        self.edges = {}     # insertion index -> (u, v)
        self.next = 0
        self._cache = None

    def apply(self, op, args):
        if op == "insert":
            self.edges[self.next] = tuple(args)
            self.next += 1
            self._cache = None
            return None
        if op == "delete-id":
            del self.edges[args[0]]
            self._cache = None
            return None
        if self._cache is None:
            g = SnapshotGraph(self.n, list(self.edges.values()))
            br = [g.edges[k] for k in sorted(bridges(g))]
            self._cache = (g, components(self.n, g.edges), two_ecc(g), br)
        g, comp, tc, br = self._cache
        if op == "conn":
            return {str(comp[args[0]] == comp[args[1]]).lower()}
        if op == "2conn":
            return {str(tc[args[0]] == tc[args[1]]).lower()}
        if op == "size":
            return {str(comp.count(comp[args[0]]))}
        if op == "2size":
            return {str(tc.count(tc[args[0]]))}
        if op == "bridge":
            ok = {_fmt_edge(e) for e in br if comp[e[0]] == comp[args[0]]}
            return ok or {"none"}
        if op == "bridge2":
            v, w = args
            if comp[v] != comp[w]:
                return {"disconnected"}
            if tc[v] == tc[w]:
                return {"none"}
            ok = set()
            for e in br:
                rest = list(g.edges)
                rest.remove(e)
                c2 = components(self.n, rest)
                if c2[v] != c2[w]:
                    ok.add(_fmt_edge(e))
            return ok
        raise ValueError(op)

    def dump(self):
        lines = [f"n {self.n}"]
        for k, (u, v) in sorted(self.edges.items()):
            lines.append(f"edge {k}: {u} {v}")
        return lines


def _open(path):
    if path == "-":
        return sys.stdin
    return open(path)


def _read_lines(path):
    with _open(path) as fh:
        return fh.read().splitlines()


def cmd_run(args, out):
    n, ops = parse_ops(_read_lines(args.file))
    s = Session(n)
    for lineno, op, a in ops:
        op2, a2 = s.resolve(op, a, lineno)
        ans = s.apply(op2, a2)
        if ans is not None:
            print(f"{op} {' '.join(map(str, a))} -> {ans}", file=out)
    return 0


def _kv(tokens):
    out = {}
    for t in tokens:
        k, sep, v = t.partition("=")
        if not sep or k not in ("n", "ops", "seed"):
            raise InputError(f"bad --random parameter {t!r}; use n=, ops=, seed=")
        try:
            out[k] = int(v)
        except ValueError:
            raise InputError(f"bad --random value {t!r}") from None
    return out


def check_ops(n, ops, out):
    """Replay (lineno, op, args) through both sides.  Returns the exit code."""
    s = Session(n)
    o = OracleSession(n)
    queries = 0
    for lineno, op, a in ops:
        op2, a2 = s.resolve(op, a, lineno)
        got = s.apply(op2, a2)
        want = o.apply(op2, a2)
        if got is None:
            continue
        queries += 1
        if got not in want:
            print(f"DIVERGENCE at op {lineno}: {op} {' '.join(map(str, a))}", file=out)
            print(f"  structure: {got}", file=out)
            print(f"  oracle:    {' | '.join(sorted(want))}", file=out)
            print("  state:", file=out)
            for line in o.dump():
                print(f"    {line}", file=out)
            for e in s.G.edges.values():
                kind = "tree" if e.is_tree else "nontree"
                print(f"    level {e.id}: {e.level} {kind}", file=out)
            return 1
    print(f"ok: {len(ops)} ops, {queries} queries, no divergence", file=out)
    return 0


def cmd_check(args, out):
    if args.random is not None:
        p = _kv(args.random)
        n = p.get("n", 10)
        if n < 1:
            raise InputError("need n >= 1")
        gen = random_ops(n, p.get("ops", 1000), p.get("seed", 0))
        ops = [(i, op, a) for i, (op, a) in enumerate(gen, 1)]
    elif args.file is not None:
        n, ops = parse_ops(_read_lines(args.file))
    else:
        raise InputError("check needs a FILE or --random")
    return check_ops(n, ops, out)


def bench_row(n, ops, seed):
    s = Session(n, instrument=True)
    G = s.G
    work = list(random_ops(n, ops, seed, queries=False))
    t = time.perf_counter()
    for op, a in work:
        s.apply(op, a)
    wall = time.perf_counter() - t
    st = G.T.stats
    covers = G.T.calls["cover"]
    return {
        "n": n, "ops": ops, "wall_s": f"{wall:.6f}",
        "merges": st["merge"], "splits": st["split"], "covers": covers,
        "merges_per_op": f"{st['merge'] / ops:.4f}",
        "splits_per_op": f"{st['split'] / ops:.4f}",
        "covers_per_op": f"{covers / ops:.4f}",
        "us_per_op": f"{wall / ops * 1e6:.2f}",
    }


def cmd_bench(args, out):
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    w = csv.DictWriter(out, fieldnames=BENCH_FIELDS, lineterminator="\n")
    w.writeheader()
    for n in sizes:
        ops = args.ops if args.ops is not None else args.ops_per_n * n
        if ops <= 0 or n < 2:
            continue
        w.writerow(bench_row(n, ops, args.seed))
        out.flush()
    return 0


def parse_graph(lines):
    rows = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, _ints(line.split(), lineno)))
    if not rows or len(rows[0][1]) != 2:
        raise InputError("expected header 'n m'")
    n, m = rows[0][1]
    if len(rows) - 1 != m:
        raise InputError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, uv in rows[1:]:
        if len(uv) != 2 or not all(0 <= x < n for x in uv):
            raise InputError(f"line {lineno}: expected 'u v' with 0 <= u, v < {n}")
        edges.append(tuple(uv))
    return SnapshotGraph(n, edges)


def cmd_matching(args, out):
    g = parse_graph(_read_lines(args.file))
    r = unique_perfect_matching(g)
    if not r.unique:
        print("not-unique", file=out)
        return 0
    print("unique", file=out)
    for k in sorted(r.matching):
        print(_fmt_edge(g.edges[k]), file=out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="artifact", description="Dynamic bridges and 2-edge-connectivity.")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="replay an op file and print query answers")
    r.add_argument("file", help="op file, or - for stdin")
    c = sub.add_parser("check", help="replay against the brute-force oracle")
    c.add_argument("file", nargs="?")
    c.add_argument("--random", nargs="+", metavar="K=V", help="n=, ops=, seed= for a generated workload")
    b = sub.add_parser("bench", help="CSV of update costs on a doubling run")
    b.add_argument("--sizes", default=",".join(str(1 << k) for k in range(6, 14)))
    b.add_argument("--ops-per-n", type=int, default=4)
    b.add_argument("--ops", type=int, default=None, help="fixed op count, overrides --ops-per-n")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--output", "-o", default="-")
    m = sub.add_parser("matching", help="unique perfect matching verdict")
    m.add_argument("file", help="graph file ('n m' then m lines 'u v'), or - for stdin")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    handlers = {"run": cmd_run, "check": cmd_check, "bench": cmd_bench, "matching": cmd_matching}
    try:
        if args.cmd == "bench" and args.output != "-":
            with open(args.output, "w", newline="") as fh:
                return cmd_bench(args, fh)
        return handlers[args.cmd](args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
