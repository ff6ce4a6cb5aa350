"""Good relations among configurations of 3-cycles.

A subset S of cycles is *good* when some integer relation
``sum_i lam_i [L_i] = 0`` holds with every ``lam_i`` nonzero. In matroid
language: S is a union of circuits of the row matroid of the class matrix,
i.e. no element of S is a coloop of S.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _modp
from .zlinalg import (
    IntegerMatrix,
    kernel_basis,
    normalize_vector,
    pivot_columns,
    rank_exact,
)

__all__ = [
    "CycleConfiguration",
    "GoodRelation",
    "SizeResult",
    "SearchReport",
    "is_good_subset",
    "good_relation",
    "span_dim",
    "search_good_subsets",
]


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CycleConfiguration:
    """Labelled 3-cycles with class rows, optional pairing, and disjointness.

    ``disjoint`` holds unordered index pairs ``(i, j)`` with ``i < j``.
    """

    labels: tuple
    classes: IntegerMatrix
    pairing: IntegerMatrix | None = None
    disjoint: frozenset = field(default_factory=frozenset)
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.labels)
        if self.classes.rows != n:
            raise ValueError(f"classes has {self.classes.rows} rows for {n} labels")
        pairs = set()
        for i, j in self.disjoint:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"disjointness must be irreflexive (index {i})")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"disjoint pair ({i}, {j}) out of range")
            pairs.add(_pair(i, j))
        object.__setattr__(self, "disjoint", frozenset(pairs))
        P = self.pairing
        if P is not None:
            if P.shape != (n, n):
                raise ValueError("pairing must be square of size len(labels)")
            arr = P.to_array()
            if n and np.any(arr + arr.T != 0):
                raise ValueError("pairing must be antisymmetric")
            for i, j in pairs:
                if P[i, j] != 0:
                    raise ValueError(f"disjoint cycles {i}, {j} have nonzero pairing")

    def __len__(self) -> int:
        return len(self.labels)

    def is_disjoint(self, i: int, j: int) -> bool:
        return i != j and _pair(i, j) in self.disjoint

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in self.labels]
        for i, j in self.disjoint:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def pairwise_disjoint(self, S: Iterable[int]) -> bool:
        S = list(S)
        return all(self.is_disjoint(a, b) for a, b in itertools.combinations(S, 2))

    def subconfiguration(self, S: Sequence[int]) -> "CycleConfiguration":
        S = list(S)
        pos = {s: k for k, s in enumerate(S)}
        pairs = {(pos[i], pos[j]) for i, j in self.disjoint if i in pos and j in pos}
        return CycleConfiguration(
            labels=tuple(self.labels[s] for s in S),
            classes=self.classes.submatrix(S, None),
            pairing=None if self.pairing is None else self.pairing.submatrix(S, S),
            disjoint=frozenset(pairs),
            provenance=dict(self.provenance),
        )


@dataclass(frozen=True)
class GoodRelation:
    subset: tuple[int, ...]
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "subset", tuple(int(s) for s in self.subset))
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.subset) != len(self.coefficients):
            raise ValueError("subset and coefficients differ in length")
        if len(set(self.subset)) != len(self.subset):
            raise ValueError("subset indices must be distinct")
        if any(c == 0 for c in self.coefficients):
            raise ValueError("every coefficient of a good relation is nonzero")

    def verify(self, config: CycleConfiguration) -> bool:
        """Re-check ``sum lam_i classes[i] == 0`` by direct multiplication."""
        sub = config.classes.submatrix(self.subset, None)
        return not any(sub.left_apply(self.coefficients))


def _check_subset(config: CycleConfiguration, S) -> list[int]:
    S = list(S)
    n = len(config)
    for s in S:
        if not (0 <= s < n):
            raise IndexError(f"cycle index {s} out of range 0..{n - 1}")
    if len(set(S)) != len(S):
        raise ValueError("repeated index in subset")
    return S


def span_dim(config: CycleConfiguration, S: Iterable[int]) -> int:
    S = _check_subset(config, S)
    if not S:
        return 0
    return rank_exact(config.classes.submatrix(S, None))


def _compressed(classes: IntegerMatrix) -> IntegerMatrix:
    """Keep an independent set of columns; row relations are unchanged."""
    if classes.rows == 0 or classes.cols <= classes.rows:
        return classes
    return classes.submatrix(None, pivot_columns(classes))


def is_good_subset(config: CycleConfiguration, S: Iterable[int]) -> bool:
    """True iff S carries an integer relation with full support.

    Row ``i`` lies in the rational span of the other rows of S exactly when
    some kernel vector is nonzero at ``i``; we test every ``i`` at once by
    looking for zero columns in a kernel basis.
    """
    S = _check_subset(config, S)
    if not S:
        raise ValueError("is_good_subset needs a nonempty subset")
    K = kernel_basis(_compressed(config.classes.submatrix(S, None)))
    return all(any(k[i] for k in K) for i in range(len(S)))


def _full_support_combination(K: list[tuple[int, ...]]) -> tuple[int, ...] | None:
    """Fold kernel vectors together with the smallest multiplier that keeps
    the union of supports; None if some coordinate vanishes on all of K."""
    if not K:
        return None
    size = len(K[0])
    target = {i for k in K for i in range(size) if k[i]}
    if len(target) < size:
        return None
    v = list(K[0])
    for b in K[1:]:
        want = {i for i in range(size) if v[i] or b[i]}
        m = 1
        while True:
            w = [x + m * y for x, y in zip(v, b)]
            if all(w[i] for i in want):
                v = w
                break
            m += 1
    return normalize_vector(v)


def good_relation(config: CycleConfiguration, S: Iterable[int]) -> GoodRelation | None:
    S = _check_subset(config, S)
    if not S:
        raise ValueError("good_relation needs a nonempty subset")
    K = kernel_basis(_compressed(config.classes.submatrix(S, None)))
    lam = _full_support_combination(K)
    if lam is None:
        return None
    rel = GoodRelation(tuple(S), lam)
    if not rel.verify(config):  # pragma: no cover - exactness guard
        raise ArithmeticError("kernel vector failed re-verification")
    return rel


@dataclass(frozen=True)
class SizeResult:
    size: int
    subset: tuple[int, ...] | None
    span: int | None
    relation: GoodRelation | None

    @property
    def found(self) -> bool:
        return self.subset is not None


@dataclass(frozen=True)
class SearchReport:
    method: str
    seed: int
    size_range: tuple[int, int]
    results: tuple[SizeResult, ...]
    moves: int
    restarts: int
    observations: tuple[str, ...] = ()

    def result(self, k: int) -> SizeResult:
        for r in self.results:
            if r.size == k:
                return r
        raise KeyError(k)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "seed": self.seed,
            "size_range": list(self.size_range),
            "moves": self.moves,
            "restarts": self.restarts,
            "observations": list(self.observations),
            "results": [
                {
                    "size": r.size,
                    "found": r.found,
                    "subset": None if r.subset is None else list(r.subset),
                    "span": r.span,
                    "coefficients": None if r.relation is None
                    else [str(c) for c in r.relation.coefficients],
                }
                for r in self.results
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        results = []
        for r in d["results"]:
            sub = None if r["subset"] is None else tuple(r["subset"])
            rel = None
            if r.get("coefficients") is not None:
                rel = GoodRelation(sub, tuple(int(c) for c in r["coefficients"]))
            results.append(SizeResult(r["size"], sub, r["span"], rel))
        return cls(
            method=d["method"],
            seed=d["seed"],
            size_range=tuple(d["size_range"]),
            results=tuple(results),
            moves=d["moves"],
            restarts=d["restarts"],
            observations=tuple(d.get("observations", ())),
        )


def _cliques(adj: list[set[int]], k: int):
    """Size-k cliques of the disjointness graph in lexicographic order."""
    n = len(adj)

    def extend(chosen, cands):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        need = k - len(chosen)
        for pos, v in enumerate(cands):
            if len(cands) - pos < need:
                return
            yield from extend(chosen + [v], [w for w in cands[pos + 1:] if w in adj[v]])

    if k == 0:
        return
    yield from extend([], list(range(n)))


def _exhaustive(config, kmin, kmax):
    adj = config.adjacency()
    out = {}
    for k in range(kmin, kmax + 1):
        best = None
        best_span = -1
        for S in _cliques(adj, k) if k > 1 else ((i,) for i in range(len(config))):
            sp = span_dim(config, S)
            if sp <= best_span:
                continue
            if is_good_subset(config, S):
                best, best_span = S, sp
        out[k] = best
    return out


class _LocalSearch:
    """Seeded removal/insertion descent over good subsets, driven mod p."""

    def __init__(self, config: CycleConfiguration, kmin: int, kmax: int,
                 seed: int, budget: int):
        self.config = config
        self.kmin, self.kmax = kmin, kmax
        self.seed = seed
        self.budget = budget
        self.A = _modp.reduce(_compressed(config.classes).to_array()) if len(config) \
            else np.zeros((0, 0), dtype=np.int64)
        self.adj = config.adjacency()
        self.moves = 0
        self.restarts = 0
        self.best: dict[int, tuple[int, tuple[int, ...]]] = {}
        self.ceiling = _modp.rank(self.A) if len(config) else 0

    def _rank(self, S) -> int:
        return _modp.rank(self.A[list(S)]) if S else 0

    def _greedy_clique(self, order) -> list[int]:
        # independent elements first (marginal span 1), then the rest
        chosen: list[int] = []
        basis_rows: list[int] = []
        for v in order:
            if all(v in self.adj[c] for c in chosen):
                if self._rank(basis_rows + [v]) > len(basis_rows):
                    chosen.append(v)
                    basis_rows.append(v)
        for v in order:
            if v not in chosen and all(v in self.adj[c] for c in chosen):
                chosen.append(v)
        return sorted(chosen)

    def _kernel(self, S):
        return _modp.left_kernel(self.A[list(S)])

    def _good_core(self, S) -> list[int]:
        K = self._kernel(S)
        return [s for i, s in enumerate(S) if K.shape[0] and np.any(K[:, i])]

    def _record(self, S, span):
        k = len(S)
        if not (self.kmin <= k <= self.kmax):
            return
        key = tuple(S)
        cur = self.best.get(k)
        if cur is None or span > cur[0] or (span == cur[0] and key < cur[1]):
            self.best[k] = (span, key)

    def _done(self) -> bool:
        return all(k in self.best and self.best[k][0] == self.ceiling
                   for k in range(self.kmin, self.kmax + 1))

    def run(self, max_restarts: int = 64):
        n = len(self.config)
        while self.moves < self.budget and self.restarts < max_restarts and not self._done():
            rng = np.random.default_rng([self.seed, self.restarts])
            order = list(range(n)) if self.restarts == 0 else [int(x) for x in rng.permutation(n)]
            self.restarts += 1
            S = self._good_core(self._greedy_clique(order))
            if not S:
                continue
            span = self._rank(S)
            removed: list[int] = []
            self._record(S, span)
            stalls = 0
            while len(S) > self.kmin and self.moves < self.budget:
                K = self._kernel(S)
                keys = _modp.column_keys(K)
                counts: dict = {}
                for key in keys:
                    counts[key] = counts.get(key, 0) + 1
                allowed = [i for i, key in enumerate(keys) if key is not None and counts[key] == 1]
                self.moves += 1
                if allowed:
                    i = allowed[int(rng.integers(len(allowed)))]
                    removed.append(S.pop(i))
                    self._record(S, span)
                    continue
                # stuck on a union of parallel circuits: re-insert and retry
                if not removed or stalls >= 8:
                    break
                stalls += 1
                back = removed.pop(int(rng.integers(len(removed))))
                S = sorted(S + [back])
        return self


def search_good_subsets(config: CycleConfiguration, size_range, seed: int = 0, *,
                        budget: int = 100_000, exhaustive_limit: int = 20,
                        threads: int = 1) -> SearchReport:
    """Best pairwise-disjoint good subset for every size in ``size_range``.

    "Best" means maximal span, ties broken by the lexicographically smallest
    index tuple. Configurations with at most ``exhaustive_limit`` cycles are
    searched exhaustively; larger ones by a seeded local search whose
    candidates are all re-verified exactly.
    """
    kmin, kmax = (size_range, size_range) if isinstance(size_range, int) else size_range
    kmin, kmax = int(kmin), int(kmax)
    n = len(config)
    if kmin < 1 or kmax < kmin:
        raise ValueError(f"bad size range ({kmin}, {kmax})")
    observations = []
    if n <= exhaustive_limit:
        method = "exhaustive"
        found = _exhaustive(config, kmin, min(kmax, n))
        moves = restarts = 0
        candidates = {k: found.get(k) for k in range(kmin, kmax + 1)}
    else:
        method = "local-search"
        ls = _LocalSearch(config, kmin, min(kmax, n), seed, budget).run()
        moves, restarts = ls.moves, ls.restarts
        candidates = {k: (ls.best[k][1] if k in ls.best else None) for k in range(kmin, kmax + 1)}
        observations.append(f"span ceiling (rank of all classes) = {ls.ceiling}")

    # same row relations and ranks, far fewer columns
    slim = CycleConfiguration(config.labels, _compressed(config.classes),
                              disjoint=config.disjoint)

    def verify(k):
        S = candidates[k]
        if S is None or not config.pairwise_disjoint(S):
            return SizeResult(k, None, None, None)
        rel = good_relation(slim, S)
        if rel is None or not rel.verify(config):
            return SizeResult(k, None, None, None)
        return SizeResult(k, tuple(S), span_dim(slim, S), rel)

    ks = list(range(kmin, kmax + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(verify, ks))
    else:
        results = [verify(k) for k in ks]
    for r in results:
        if candidates[r.size] is not None and not r.found:
            observations.append(f"size {r.size}: candidate rejected by exact check")
    return SearchReport(method, int(seed), (kmin, kmax), tuple(results), moves, restarts,
                        tuple(observations))
