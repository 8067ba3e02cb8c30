"""Exact clique and coloring solvers with verifiable certificates.

All searches are deterministic: vertices are ordered by descending degree
with ties broken by id, candidate sets are walked lowest-bit-first, and no
result depends on timing. Budgets abort a search with the bounds certified
so far instead of returning an unproven answer.

Graphs above CORE_THRESHOLD vertices are reduced to their zero-divisor
core first; the reduction preserves clique and chromatic numbers under the
max(., 2) rule, and witnesses are reported in ring-element ids either way.
"""

from __future__ import annotations

import os
import sys
import time
from dataclasses import dataclass

from .errors import BudgetError, ContractError, InternalCheckError
from .graphs import BeckGraph

DEFAULT_BUDGET = 60.0
CORE_THRESHOLD = 24
MIN_S_EXHAUSTIVE_CAP = 20

# decision searches recurse once per vertex; cores can exceed the default limit
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def solver_budget(budget: float | None) -> float:
    if budget is not None:
        return float(budget)
    env = os.environ.get("BECKRING_BUDGET")
    if env:
        return float(env)
    return DEFAULT_BUDGET


class _OutOfTime(Exception):
    pass


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


# ---------------------------------------------------------------------------
# result types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Clique:
    """Pairwise-annihilating vertex set, sorted by ring-element id."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CliqueSplit:
    """A maximum clique partitioned into square-zero (B) and square-nonzero (C) members."""

    clique: Clique
    b_part: tuple[int, ...]
    c_part: tuple[int, ...]

    @property
    def b_size(self) -> int:
        return len(self.b_part)

    @property
    def c_size(self) -> int:
        return len(self.c_part)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring: class_of[v] is the class index of vertex v, in [0, k)."""

    class_of: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class SZero:
    """Count of color classes containing a square-zero element; `exact` is False
    when it is only a best-effort upper bound from local search."""

    s: int
    exact: bool = True


# ---------------------------------------------------------------------------
# verification (independent of solver internals)
# ---------------------------------------------------------------------------


def verify_clique(g, vertices) -> bool:
    vs = list(vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if u == v or not g.has_edge(u, v):
                return False
    return True


def verify_coloring(g, coloring: Coloring) -> bool:
    if len(coloring.class_of) != g.n:
        return False
    seen = set()
    for v, c in enumerate(coloring.class_of):
        if not 0 <= c < coloring.k:
            return False
        seen.add(c)
        rest = g.adj[v] >> (v + 1)
        for off in _bits(rest):
            if coloring.class_of[v + 1 + off] == c:
                return False
    return len(seen) == coloring.k


# ---------------------------------------------------------------------------
# maximum clique
# ---------------------------------------------------------------------------


class _CliqueSearch:
    """Branch and bound with a greedy-coloring upper bound (bitset sets)."""

    def __init__(self, n: int, adj: list[int], deadline: float):
        self.n = n
        self.deadline = deadline
        self.order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
        pos = [0] * n
        for i, v in enumerate(self.order):
            pos[v] = i
        radj = [0] * n
        for i, v in enumerate(self.order):
            m = 0
            for u in _bits(adj[v]):
                m |= 1 << pos[u]
            radj[i] = m
        self.radj = radj
        self.best: list[int] = []
        self._ticks = 0

    def _tick(self):
        self._ticks += 1
        if self._ticks % 512 == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime()

    def _check_deadline(self):
        if time.monotonic() > self.deadline:
            raise _OutOfTime()

    def _greedy_seed(self):
        for s in range(min(self.n, 8)):
            clique = [s]
            cand = self.radj[s]
            while cand:
                pick, best_deg = -1, -1
                for v in _bits(cand):
                    d = (self.radj[v] & cand).bit_count()
                    if d > best_deg:
                        pick, best_deg = v, d
                clique.append(pick)
                cand &= self.radj[pick]
            if len(clique) > len(self.best):
                self.best = clique

    @staticmethod
    def _color_sort(p: int, radj: list[int]) -> list[tuple[int, int]]:
        out = []
        uncolored = p
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                out.append((v, color))
                avail &= ~radj[v]
                avail ^= b
                uncolored ^= b
        return out

    def _expand(self, r: list[int], p: int):
        self._tick()
        order = self._color_sort(p, self.radj)
        for v, c in reversed(order):
            if len(r) + c <= len(self.best):
                return
            r.append(v)
            np_ = p & self.radj[v]
            if np_:
                self._expand(r, np_)
            elif len(r) > len(self.best):
                self.best = r.copy()
            r.pop()
            p ^= 1 << v

    def run(self) -> list[int]:
        if self.n == 0:
            return []
        self._greedy_seed()
        self._check_deadline()
        self._expand([], (1 << self.n) - 1)
        return sorted(self.order[v] for v in self.best)


class _SplitSearch(_CliqueSearch):
    """Lexicographic objective (clique size, then square-zero count)."""

    def __init__(self, n, adj, sq0_bits, deadline, seed: list[int]):
        super().__init__(n, adj, deadline)
        pos = [0] * n
        for i, v in enumerate(self.order):
            pos[v] = i
        m = 0
        for v in _bits(sq0_bits):
            m |= 1 << pos[v]
        self.sq0 = m
        rseed = [pos[v] for v in seed]
        self.best = rseed
        self.best_b = len([v for v in rseed if (self.sq0 >> v) & 1])

    def _expand(self, r: list[int], rb: int, p: int):
        self._tick()
        order = self._color_sort(p, self.radj)
        for v, c in reversed(order):
            if len(r) + c < len(self.best):
                return
            if len(r) + c == len(self.best) and rb + (p & self.sq0).bit_count() <= self.best_b:
                p ^= 1 << v
                continue
            v_b = (self.sq0 >> v) & 1
            r.append(v)
            np_ = p & self.radj[v]
            if np_:
                self._expand(r, rb + v_b, np_)
            else:
                cand = (len(r), rb + v_b)
                if cand > (len(self.best), self.best_b):
                    self.best = r.copy()
                    self.best_b = rb + v_b
            r.pop()
            p ^= 1 << v

    def run(self) -> list[int]:
        self._check_deadline()
        self._expand([], 0, (1 << self.n) - 1)
        return sorted(self.order[v] for v in self.best)


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------


def _dsatur(n: int, adj: list[int]) -> list[int]:
    color = [-1] * n
    neigh = [0] * n
    deg = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        pick, key = -1, None
        for v in range(n):
            if color[v] == -1:
                k = (neigh[v].bit_count(), deg[v], -v)
                if pick == -1 or k > key:
                    pick, key = v, k
        c = 0
        used = neigh[pick]
        while (used >> c) & 1:
            c += 1
        color[pick] = c
        for u in _bits(adj[pick]):
            if color[u] == -1:
                neigh[u] |= 1 << c
    return color


class _KColorSearch:
    """Decision search for a proper k-coloring, symmetry-broken by a
    pre-colored maximum clique plus a lowest-fresh-color rule."""

    def __init__(self, n, adj, k, clique, deadline):
        self.n = n
        self.adj = adj
        self.k = k
        self.deadline = deadline
        self.deg = [adj[v].bit_count() for v in range(n)]
        self.color = [-1] * n
        self.dom = [(1 << k) - 1] * n
        self._ticks = 0
        self.start_used = len(clique)
        for i, v in enumerate(sorted(clique)):
            self.color[v] = i
            for u in _bits(adj[v]):
                self.dom[u] &= ~(1 << i)

    def _tick(self):
        self._ticks += 1
        if self._ticks % 512 == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime()

    def _pick(self) -> int:
        pick, key = -1, None
        for v in range(self.n):
            if self.color[v] == -1:
                k = (self.dom[v].bit_count(), -self.deg[v], v)
                if pick == -1 or k < key:
                    pick, key = v, k
        return pick

    def _solve(self, used: int) -> bool:
        self._tick()
        v = self._pick()
        if v == -1:
            return True
        allowed = self.dom[v] & ((1 << min(used + 1, self.k)) - 1)
        for c in _bits(allowed):
            self.color[v] = c
            bit = 1 << c
            changed = []
            dead = False
            for u in _bits(self.adj[v]):
                if self.color[u] == -1 and self.dom[u] & bit:
                    self.dom[u] &= ~bit
                    changed.append(u)
                    if self.dom[u] == 0:
                        dead = True
            if not dead and self._solve(max(used, c + 1)):
                return True
            for u in changed:
                self.dom[u] |= bit
            self.color[v] = -1
        return False

    def run(self) -> list[int] | None:
        if time.monotonic() > self.deadline:
            raise _OutOfTime()
        if any(self.color[v] == -1 and self.dom[v] == 0 for v in range(self.n)):
            return None
        if self._solve(self.start_used):
            return self.color
        return None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _reduce(g, use_core: bool | None = None):
    if isinstance(g, BeckGraph):
        if use_core is True or (use_core is None and g.n > CORE_THRESHOLD):
            return g.core()
    return g


def _full_ids(work, raw: list[int]) -> list[int]:
    return sorted(work.element_of(v) for v in raw)


def max_clique(g, budget: float | None = None, *, use_core: bool | None = None) -> Clique:
    """Exact maximum clique with witness; deterministic across runs.

    `use_core` forces (True) or forbids (False) the zero-divisor core
    reduction; None applies it automatically above CORE_THRESHOLD.
    """
    work = _reduce(g, use_core)
    deadline = time.monotonic() + solver_budget(budget)
    search = _CliqueSearch(work.n, work.adj, deadline)
    try:
        raw = search.run()
    except _OutOfTime:
        lb_w = _full_ids(work, [search.order[v] for v in search.best])
        raise BudgetError("max_clique", len(lb_w), witness=lb_w) from None
    verts = sorted(work.element_of(v) for v in raw)
    if work is not g and len(verts) < 2 and g.n >= 2:
        verts = [0, _smallest_nonzero(g)]
    return Clique(tuple(verts))


def _smallest_nonzero(g) -> int:
    return g.element_of(1) if g.n > 1 else 0


def best_clique_split(g, budget: float | None = None, *, use_core: bool | None = None) -> CliqueSplit:
    """Among all maximum cliques, one maximizing the square-zero part."""
    work = _reduce(g, use_core)
    deadline = time.monotonic() + solver_budget(budget)
    base = _CliqueSearch(work.n, work.adj, deadline)
    try:
        seed = base.run()
        search = _SplitSearch(work.n, work.adj, work.sq0_bits, deadline, seed)
        raw = search.run()
    except _OutOfTime:
        raise BudgetError("best_clique_split", len(base.best)) from None
    verts = sorted(work.element_of(v) for v in raw)
    if work is not g and len(verts) < 2 and g.n >= 2:
        verts = [0, _smallest_nonzero(g)]
    ring = g.ring
    b = tuple(v for v in verts if ring.square(v) == 0)
    c = tuple(v for v in verts if ring.square(v) != 0)
    return CliqueSplit(Clique(tuple(verts)), b, c)


def _extend_to_full(g, work, color: list[int], k: int) -> tuple[int, Coloring]:
    """Lift a core coloring back to the full vertex set."""
    if work is g:
        return k, Coloring(tuple(color), k)
    full = [-1] * g.n
    for i, e in enumerate(work.to_ring):
        full[e] = color[i]
    if k < 2:
        k = 2
    zero_class = full[0]
    unit_class = 0 if zero_class != 0 else 1
    for v in range(g.n):
        if full[v] == -1:
            full[v] = unit_class
    return k, Coloring(tuple(full), k)


def _twin_fuse(n: int, adj: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Fuse vertices with identical neighborhoods.

    Equal adjacency rows imply non-adjacency, so fused vertices can always
    share a color and can never sit in a clique together: both the
    chromatic and the clique number survive the fusion exactly.
    """
    group_of_row: dict[int, int] = {}
    reps: list[int] = []
    member_group = [0] * n
    for v in range(n):
        gi = group_of_row.get(adj[v])
        if gi is None:
            gi = len(reps)
            group_of_row[adj[v]] = gi
            reps.append(v)
        member_group[v] = gi
    rep_mask = 0
    for v in reps:
        rep_mask |= 1 << v
    pos = {v: i for i, v in enumerate(reps)}
    radj = []
    for v in reps:
        m = 0
        for u in _bits(adj[v] & rep_mask):
            m |= 1 << pos[u]
        radj.append(m)
    return reps, member_group, radj


def chromatic_number(
    g, budget: float | None = None, *, use_core: bool | None = None
) -> tuple[int, Coloring]:
    """Exact chromatic number and a proper coloring witness.

    DSATUR supplies the upper bound, a maximum clique the lower bound, and
    any gap is closed by iterated k-coloring decision searches on the core
    (with same-neighborhood vertices fused), symmetry-broken by
    pre-coloring the clique.
    """
    work = _reduce(g, use_core)
    deadline = time.monotonic() + solver_budget(budget)
    reps, member_group, radj = _twin_fuse(work.n, work.adj)
    rn = len(reps)
    greedy = _dsatur(rn, radj)
    ub = max(greedy) + 1 if greedy else 0
    clique_search = _CliqueSearch(rn, radj, deadline)

    def lift(colors: list[int], k: int) -> tuple[int, Coloring]:
        full = [colors[member_group[v]] for v in range(work.n)]
        return _extend_to_full(g, work, full, k)

    try:
        clique_raw = clique_search.run()
    except _OutOfTime:
        if len(clique_search.best) == ub:
            # the partial clique already pins chi even though the
            # clique search itself was cut short
            return lift(greedy, ub)
        raise BudgetError("chromatic_number", len(clique_search.best), ub) from None
    lb = len(clique_raw)
    if lb == ub:
        return lift(greedy, ub)
    for k in range(lb, ub):
        search = _KColorSearch(rn, radj, k, clique_raw, deadline)
        try:
            found = search.run()
        except _OutOfTime:
            raise BudgetError("chromatic_number", k, ub) from None
        if found is not None:
            return lift(found, k)
    return lift(greedy, ub)


def _class_sq0_flags(g, coloring: Coloring) -> list[bool]:
    flags = [False] * coloring.k
    mask = g.ring.square_zero_mask
    for v in range(g.n):
        if mask[g.element_of(v)]:
            flags[coloring.class_of[v]] = True
    return flags


def s_of(g, coloring: Coloring) -> SZero:
    """Number of classes of a proper coloring containing a square-zero element."""
    if not verify_coloring(g, coloring):
        raise ContractError("s_of requires a proper coloring of the given graph")
    return SZero(sum(_class_sq0_flags(g, coloring)))


class _MinSSearch:
    """Exhaustive scan of all proper k-colorings of a small graph, keeping
    one with the fewest square-zero-bearing classes."""

    def __init__(self, n, adj, sq0_bits, k, s_floor, deadline):
        self.n = n
        self.adj = adj
        self.sq0 = sq0_bits
        self.k = k
        self.s_floor = s_floor
        self.deadline = deadline
        self.order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
        self.color = [-1] * n
        self.best: list[int] | None = None
        self.best_s = n + 1
        self._ticks = 0

    def _tick(self):
        self._ticks += 1
        if self._ticks % 4096 == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime()

    def _go(self, idx: int, used: int, class_sq0: int, s: int):
        self._tick()
        if s >= self.best_s:
            return
        if idx == self.n:
            self.best = self.color.copy()
            self.best_s = s
            return
        v = self.order[idx]
        sq = (self.sq0 >> v) & 1
        forbidden = 0
        for u in _bits(self.adj[v]):
            if self.color[u] != -1:
                forbidden |= 1 << self.color[u]
        for c in range(min(used + 1, self.k)):
            if (forbidden >> c) & 1:
                continue
            marks = sq and not ((class_sq0 >> c) & 1)
            self.color[v] = c
            self._go(
                idx + 1,
                max(used, c + 1),
                class_sq0 | (1 << c) if marks else class_sq0,
                s + (1 if marks else 0),
            )
            self.color[v] = -1
            if self.best_s <= self.s_floor:
                return

    def run(self):
        self._go(0, 0, 0, 0)
        return self.best, self.best_s


def _local_min_s(work, color: list[int], k: int) -> tuple[list[int], int]:
    """Greedy improvement: try to empty whole classes of their square-zero
    members by recoloring; never increases the class count."""
    color = color.copy()
    sq0 = work.sq0_bits
    improved = True
    while improved:
        improved = False
        flags = [0] * k
        for v in range(work.n):
            if (sq0 >> v) & 1:
                flags[color[v]] += 1
        bearing = [c for c in range(k) if flags[c] > 0]
        for c in sorted(bearing, key=lambda c: flags[c]):
            movers = [v for v in range(work.n) if color[v] == c and (sq0 >> v) & 1]
            plan = {}
            ok = True
            for v in movers:
                choice = -1
                for d in bearing:
                    if d == c or flags[d] == 0:
                        continue
                    if all(color[u] != d or u in plan for u in _bits(work.adj[v])):
                        if all(plan.get(u) != d for u in _bits(work.adj[v])):
                            choice = d
                            break
                if choice == -1:
                    ok = False
                    break
                plan[v] = choice
            if ok and movers and any(color[u] == c for u in range(work.n) if u not in plan):
                for v, d in plan.items():
                    color[v] = d
                improved = True
                break
    s = len({color[v] for v in range(work.n) if (sq0 >> v) & 1})
    return color, s


def min_s_optimal_coloring(
    g,
    budget: float | None = None,
    exhaustive_cap: int = MIN_S_EXHAUSTIVE_CAP,
) -> tuple[Coloring, SZero]:
    """Among proper colorings with exactly chi classes, minimize the number
    of classes containing a square-zero element.

    Exact (exhaustive over the core) when the core has at most
    `exhaustive_cap` vertices; otherwise a best-effort local search whose
    achieved s is reported with exact=False.
    """
    work = _reduce(g)
    deadline = time.monotonic() + solver_budget(budget)
    k, baseline = chromatic_number(g, budget)
    base_s = s_of(g, baseline).s
    if work.n <= exhaustive_cap:
        s_floor = _sq0_clique_floor(work, deadline)
        if base_s <= s_floor:
            return baseline, SZero(base_s)
        search = _MinSSearch(work.n, work.adj, work.sq0_bits, k, s_floor, deadline)
        try:
            best, best_s = search.run()
        except _OutOfTime:
            raise BudgetError("min_s_optimal_coloring", 1, base_s) from None
        if best is None:
            raise InternalCheckError("min-s search found no proper coloring at chi")
        _, coloring = _extend_to_full(g, work, best, k)
        return coloring, SZero(best_s)
    core_color = [baseline.class_of[work.element_of(v)] for v in range(work.n)]
    improved, s = _local_min_s(work, core_color, k)
    if s >= base_s:
        return baseline, SZero(base_s, exact=False)
    kk, coloring = _extend_to_full(g, work, improved, k)
    return coloring, SZero(s, exact=False)


def _sq0_clique_floor(work, deadline: float) -> int:
    """Any clique of square-zero vertices forces that many distinct classes."""
    verts = list(_bits(work.sq0_bits))
    if not verts:
        return 0
    idx = {v: i for i, v in enumerate(verts)}
    sub = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in _bits(work.adj[v] & work.sq0_bits):
            sub[i] |= 1 << idx[u]
    return len(_CliqueSearch(len(verts), sub, deadline).run())
