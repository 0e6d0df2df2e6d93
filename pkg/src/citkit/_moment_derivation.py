"""Derivation of exact permutation moments for the bilinear trace statistic.

For symmetric matrices A and B with zero row sums, the statistic

    T = tr(A_pi B) = sum_{i,j} A[pi(i), pi(j)] * B[i, j]

under a uniformly random permutation ``pi`` has raw moments

    E[T^m] = sum over set partitions P of the 2m index slots of
             S_A(P) * S_B(P) / (n)_{|P|}

where ``(n)_b`` is the falling factorial and ``S_X(P)`` sums the edge
products over index tuples whose coincidence pattern is exactly ``P``.
``S_X`` follows from the unconstrained ("free") sums ``F_X`` by Moebius
inversion on the partition lattice, and each free sum factors over the
connected components of the multigraph obtained by collapsing the m index
pairs according to ``P``.  Because the matrices have zero row sums, every
component with a degree-one vertex vanishes, which leaves the short list of
invariants in :data:`CATALOGUE`.

Running this module as a script regenerates :mod:`citkit._moment_tables` and
re-verifies every table against brute-force enumeration over all n!
permutations with exact rational arithmetic (n = 7 for the first three
moments, n = 8 for the fourth).  The tests exercise the same checks at lower
order, so the shipped tables stay tied to this construction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

__all__ = [
    "CATALOGUE",
    "derive_table",
    "brute_raw_moment",
    "random_centered",
    "rational_invariants",
    "evaluate_table",
    "falling",
]


# ---------------------------------------------------------------------------
# set partitions and the partition lattice


def set_partitions(elems):
    elems = list(elems)
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for part in set_partitions(rest):
        yield (frozenset([first]),) + part
        for i, blk in enumerate(part):
            yield part[:i] + (blk | {first},) + part[i + 1:]


def _canon(partition):
    return tuple(sorted((frozenset(b) for b in partition), key=sorted))


def _refines(P, Q):
    """True when every block of P lies inside a block of Q."""
    owner = {}
    for qi, qb in enumerate(Q):
        for e in qb:
            owner[e] = qi
    return all(len({owner[e] for e in pb}) == 1 for pb in P)


def _mobius(P, Q):
    """Moebius function of the partition lattice on the interval [P, Q]."""
    owner = {}
    for qi, qb in enumerate(Q):
        for e in qb:
            owner[e] = qi
    merged = [0] * len(Q)
    for pb in P:
        merged[owner[next(iter(pb))]] += 1
    out = 1
    for m in merged:
        out *= (-1) ** (m - 1) * factorial(m - 1)
    return out


def falling(n, b):
    out = 1
    for i in range(b):
        out *= n - i
    return out


# ---------------------------------------------------------------------------
# free sums of collapsed multigraphs

def _canon_edges(edges):
    verts = sorted({v for e in edges for v in e})
    best = None
    for perm in permutations(range(len(verts))):
        relab = {v: perm[i] for i, v in enumerate(verts)}
        form = tuple(sorted(tuple(sorted((relab[u], relab[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


# connected multigraphs (loops allowed) with minimum degree two and at most
# four edges, keyed by canonical edge multiset; values name the invariant of
# a symmetric zero-row-sum matrix X computed in ``permnull``
CATALOGUE = {
    _canon_edges([(0, 0)]): "t",                              # tr X
    _canon_edges([(0, 0), (0, 0)]): "d",                      # sum diag^2
    _canon_edges([(0, 1), (0, 1)]): "q",                      # sum X_ab^2
    _canon_edges([(0, 0), (0, 0), (0, 0)]): "d3",             # sum diag^3
    _canon_edges([(0, 1), (0, 1), (0, 1)]): "e3",             # sum X_ab^3
    _canon_edges([(0, 1), (0, 2), (1, 2)]): "tr3",            # tr X^3
    _canon_edges([(0, 0), (0, 1), (0, 1)]): "m21",            # sum X_aa X_ab^2
    _canon_edges([(0, 0), (0, 1), (1, 1)]): "m111",           # sum X_aa X_bb X_ab
    _canon_edges([(0, 0)] * 4): "d4",                         # sum diag^4
    _canon_edges([(0, 1)] * 4): "e4",                         # sum X_ab^4
    _canon_edges([(0, 0), (0, 1), (0, 2), (1, 2)]): "ltr3",   # sum X_aa (X^3)_aa
    _canon_edges([(0, 0), (0, 0), (0, 1), (0, 1)]): "l2d",    # sum X_aa^2 X_ab^2
    _canon_edges([(0, 0), (1, 1), (0, 1), (0, 1)]): "llq",    # sum X_aa X_bb X_ab^2
    _canon_edges([(0, 0), (0, 0), (0, 1), (1, 1)]): "l2le",   # sum X_aa^2 X_bb X_ab
    _canon_edges([(0, 0), (0, 1), (0, 1), (0, 1)]): "le3",    # sum X_aa X_ab^3
    _canon_edges([(0, 1), (0, 1), (0, 2), (0, 2)]): "bow",    # sum_a (sum_b X_ab^2)^2
    _canon_edges([(0, 1), (0, 1), (0, 2), (1, 2)]): "th4",    # sum X_ab^2 (X^2)_ab
    _canon_edges([(0, 1), (1, 2), (2, 3), (0, 3)]): "tr4",    # tr X^4
    _canon_edges([(0, 0), (0, 1), (1, 2), (2, 2)]): "pll",    # diag' X^2 diag
    _canon_edges([(0, 0), (0, 1), (1, 2), (1, 2)]): "lds",    # sum X_aa X_ab (X^2)_bb
}


def _classify(edges):
    deg = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + (2 if u == v else 1)
        if u != v:
            deg[v] = deg.get(v, 0) + 1
    if min(deg.values()) <= 1:
        return None
    key = _canon_edges(edges)
    if key not in CATALOGUE:
        raise ValueError(f"unclassified multigraph component: {key}")
    return CATALOGUE[key]


def _free_monomial(P, edge_slots):
    """F_X(P) as a sorted tuple of invariant names, or None when it vanishes."""
    block_of = {}
    for bi, blk in enumerate(P):
        for e in blk:
            block_of[e] = bi
    edges = [(block_of[a], block_of[b]) for a, b in edge_slots]
    parent = {v: v for e in edges for v in e}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    components = {}
    for u, v in edges:
        components.setdefault(find(u), []).append((u, v))
    names = []
    for comp in components.values():
        name = _classify(comp)
        if name is None:
            return None
        names.append(name)
    return tuple(sorted(names))


# ---------------------------------------------------------------------------
# table derivation and evaluation


def derive_table(m):
    """Coefficient table for E[T^m]: {(monA, monB, blocks): integer}."""
    slots = list(range(2 * m))
    edge_slots = [(2 * i, 2 * i + 1) for i in range(m)]
    parts = [_canon(P) for P in set_partitions(slots)]
    free = {P: _free_monomial(P, edge_slots) for P in parts}
    table = {}
    for P in parts:
        expansion = {}
        for Q in parts:
            if free[Q] is not None and _refines(P, Q):
                expansion[free[Q]] = expansion.get(free[Q], 0) + _mobius(P, Q)
        b = len(P)
        for monA, cA in expansion.items():
            if cA == 0:
                continue
            for monB, cB in expansion.items():
                if cB == 0:
                    continue
                key = (monA, monB, b)
                table[key] = table.get(key, 0) + cA * cB
    return {k: v for k, v in table.items() if v != 0}


def evaluate_table(table, inv_a, inv_b, n):
    """Evaluate one raw-moment table; exact when fed Fractions."""
    zero = inv_a["t"] * 0
    total = zero
    for (mon_a, mon_b, b), coeff in table.items():
        if b > n:
            continue  # S(P) has no distinct index tuples; the term is zero
        va = coeff
        for name in mon_a:
            va = va * inv_a[name]
        for name in mon_b:
            va = va * inv_b[name]
        total = total + va / falling(n, b)
    return total


# ---------------------------------------------------------------------------
# exact verification helpers


def random_centered(n, rng):
    """Random symmetric rational matrix with exactly zero row sums."""
    raw = [[Fraction(int(rng.integers(-9, 10))) for _ in range(n)] for _ in range(n)]
    sym = [[(raw[i][j] + raw[j][i]) / 2 for j in range(n)] for i in range(n)]
    rows = [sum(r) / n for r in sym]
    grand = sum(rows) / n
    return [[sym[i][j] - rows[i] - rows[j] + grand for j in range(n)]
            for i in range(n)]


def rational_invariants(X):
    n = len(X)
    dg = [X[i][i] for i in range(n)]
    x2 = [[sum(X[i][k] * X[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    rowsq = [sum(X[i][j] ** 2 for j in range(n)) for i in range(n)]
    rng_n = range(n)
    return {
        "t": sum(dg),
        "d": sum(v * v for v in dg),
        "d3": sum(v ** 3 for v in dg),
        "d4": sum(v ** 4 for v in dg),
        "q": sum(rowsq),
        "e3": sum(X[i][j] ** 3 for i in rng_n for j in rng_n),
        "e4": sum(X[i][j] ** 4 for i in rng_n for j in rng_n),
        "tr3": sum(sum(x2[i][k] * X[k][i] for k in rng_n) for i in rng_n),
        "tr4": sum(x2[i][j] ** 2 for i in rng_n for j in rng_n),
        "m21": sum(dg[i] * rowsq[i] for i in rng_n),
        "m111": sum(dg[i] * dg[j] * X[i][j] for i in rng_n for j in rng_n),
        "ltr3": sum(dg[i] * sum(x2[i][k] * X[k][i] for k in rng_n) for i in rng_n),
        "l2d": sum(dg[i] ** 2 * rowsq[i] for i in rng_n),
        "llq": sum(dg[i] * dg[j] * X[i][j] ** 2 for i in rng_n for j in rng_n),
        "l2le": sum(dg[i] ** 2 * dg[j] * X[i][j] for i in rng_n for j in rng_n),
        "le3": sum(dg[i] * X[i][j] ** 3 for i in rng_n for j in rng_n),
        "bow": sum(r * r for r in rowsq),
        "th4": sum(X[i][j] ** 2 * x2[i][j] for i in rng_n for j in rng_n),
        "pll": sum(dg[i] * x2[i][j] * dg[j] for i in rng_n for j in rng_n),
        "lds": sum(dg[i] * X[i][j] * rowsq[j] for i in rng_n for j in rng_n),
    }


def brute_raw_moment(A, B, power):
    """E[T^power] by full enumeration of all n! permutations (exact)."""
    n = len(A)
    total = Fraction(0)
    idx = range(n)
    for pi in permutations(idx):
        t = sum(A[pi[i]][pi[j]] * B[i][j] for i in idx for j in idx)
        total += t ** power
    return total / factorial(n)


def _main():
    import numpy as np

    tables = {m: derive_table(m) for m in (1, 2, 3, 4)}
    rng = np.random.default_rng(2024)
    for m, n in ((1, 7), (2, 7), (3, 7), (4, 8)):
        A = random_centered(n, rng)
        B = random_centered(n, rng)
        lhs = evaluate_table(tables[m], rational_invariants(A),
                             rational_invariants(B), n)
        rhs = brute_raw_moment(A, B, m)
        status = "ok" if lhs == rhs else "MISMATCH"
        print(f"E[T^{m}] vs n={n} enumeration: {status}")
        if lhs != rhs:
            raise SystemExit(1)

    import pathlib

    lines = [
        '"""Coefficient tables for exact permutation moments of tr(A_pi B).',
        "",
        "Generated by :mod:`citkit._moment_derivation` (see that module for the",
        "construction and for how to regenerate these literals).  Each table gives",
        "",
        "    E[T^m] = sum over keys (monA, monB, b) of",
        "             coeff * monA(A) * monB(B) / (n * (n-1) * ... * (n-b+1))",
        "",
        "where T = tr(A_pi B) under a uniformly random permutation pi, A and B are",
        "symmetric matrices with zero row sums, and the monomials are products of the",
        "matrix invariants computed by ``citkit.permnull.dense_invariants``.",
        "",
        "Do not edit by hand; rerun the derivation instead.",
        '"""',
        "",
    ]
    for m in (1, 2, 3, 4):
        items = sorted(tables[m].items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
        lines.append(f"T{m} = {{")
        lines.extend(f"    ({a!r}, {b!r}, {k}): {c}," for (a, b, k), c in items)
        lines.append("}")
        lines.append("")
    out = pathlib.Path(__file__).with_name("_moment_tables.py")
    out.write_text("\n".join(lines).rstrip() + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    _main()
