"""
Exact minimum crossings of K_{m,n} over circular drawings with K arcs.

The search maximizes the alternating-quadruple count over every pair of
compositions of ``m`` and ``n`` into ``k`` non-negative parts.  Because empty
arcs are allowed, one pass with ``k`` pink arcs also covers every drawing with
fewer arcs.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .closed_forms import RationalBound, eq1_subtrahend, quadruple_count, theorem2_lower_bound
from .errors import CountOverflowError, InvalidInputError, ResourceLimitError
from .model import ArcProfile, CompleteBipartiteSpec, canonical_profile

log = logging.getLogger(__name__)

# Raw (pink, black) composition pairs scored per call before giving up.
DEFAULT_MAX_PAIRS = 50_000_000
_CHUNK_ROWS = 2048
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class CprResult:
    spec: CompleteBipartiteSpec
    requested_k: int
    effective_k: int
    value: int
    witnesses: Tuple[ArcProfile, ...]
    lower_bound: RationalBound

    @property
    def witness(self) -> ArcProfile:
        return self.witnesses[0]

    @property
    def bound_attained(self) -> bool:
        return self.lower_bound.exact == self.value


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def composition_count(total: int, parts: int) -> int:
    return comb(total + parts - 1, parts - 1)


def enumerate_profiles(m: int, n: int, k: int) -> Iterator[ArcProfile]:
    """One canonical representative per rotation/reflection orbit."""
    if k < 1:
        raise InvalidInputError(f"k must be >= 1 (got {k})")
    seen = set()
    for pink in compositions(m, k):
        for black in compositions(n, k):
            c = canonical_profile(ArcProfile(k, pink, black))
            if c not in seen:
                seen.add(c)
                yield c


def _pair_index(k: int) -> List[Tuple[int, int]]:
    return list(combinations(range(k), 2))


def _pink_features(pinks: np.ndarray, k: int) -> np.ndarray:
    # column (i, j) holds m_i * m_j
    cols = [pinks[:, i] * pinks[:, j] for i, j in _pair_index(k)]
    if not cols:
        return np.zeros((len(pinks), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _black_features(blacks: np.ndarray, n: int, k: int) -> np.ndarray:
    # column (i, j) holds A * (n - A), A = black vertices strictly between M_i and M_j
    prefix = np.concatenate(
        [np.zeros((len(blacks), 1), dtype=np.int64), np.cumsum(blacks, axis=1)], axis=1
    )
    cols = []
    for i, j in _pair_index(k):
        inside = prefix[:, j] - prefix[:, i]
        cols.append(inside * (n - inside))
    if not cols:
        return np.zeros((len(blacks), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _scan_block(
    args: Tuple[int, int, int, int, int],
) -> Tuple[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
    """Best subtrahend among pink compositions ``start:stop`` against all blacks."""
    m, n, k, start, stop = args
    pinks = np.array(list(compositions(m, k))[start:stop], dtype=np.int64)
    blacks = np.array(list(compositions(n, k)), dtype=np.int64)
    bf = _black_features(blacks, n, k).T
    best = -1
    hits: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    for lo in range(0, len(pinks), _CHUNK_ROWS):
        block = pinks[lo:lo + _CHUNK_ROWS]
        scores = _pink_features(block, k) @ bf
        top = int(scores.max())
        if top < best:
            continue
        if top > best:
            best, hits = top, []
        for r, c in zip(*np.nonzero(scores == top)):
            hits.append((tuple(int(x) for x in block[r]), tuple(int(x) for x in blacks[c])))
    return best, hits


def _merge(parts: Sequence[Tuple[int, list]]) -> Tuple[int, list]:
    best = max(p[0] for p in parts)
    hits = [h for value, hs in parts if value == best for h in hs]
    return best, hits


def maximize_subtrahend(
    m: int,
    n: int,
    k: int,
    *,
    workers: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> Tuple[int, List[ArcProfile]]:
    """Maximum alternating-quadruple count over all profiles with ``k`` pink arcs.

    Returns the maximum and every optimal canonical profile, sorted.  The pink
    compositions are split into ``workers`` contiguous blocks; the merged result
    does not depend on the number of workers.
    """
    if k < 1:
        raise InvalidInputError(f"k must be >= 1 (got {k})")
    CompleteBipartiteSpec(m, n)
    if quadruple_count(m, n) >= _INT64_SAFE:
        raise CountOverflowError(f"C(m,2)C(n,2) for m={m}, n={n} exceeds the int64 fast path")
    n_pink, n_black = composition_count(m, k), composition_count(n, k)
    if n_pink * n_black > max_pairs:
        raise ResourceLimitError(
            f"{n_pink * n_black} profiles for (m={m}, n={n}, k={k}) exceed the budget {max_pairs}"
        )

    workers = max(1, min(workers, n_pink))
    bounds = [n_pink * w // workers for w in range(workers + 1)]
    jobs = [(m, n, k, bounds[w], bounds[w + 1]) for w in range(workers)]
    if workers == 1:
        parts = [_scan_block(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_block, jobs))
    best, hits = _merge(parts)
    argmax = sorted({canonical_profile(ArcProfile(k, p, b)) for p, b in hits})
    log.debug("maximize_subtrahend(%d, %d, %d) = %d, %d witnesses", m, n, k, best, len(argmax))
    return best, argmax


def effective_arcs(m: int, n: int, K: int) -> int:
    """Even arc count actually searched for a request of ``K`` arcs."""
    if not 2 <= K <= m + n:
        raise InvalidInputError(f"K must satisfy 2 <= K <= m + n = {m + n} (got {K})")
    even = K - (K % 2)
    return min(even, 2 * min(m, n))


def cpr_exact(
    m: int,
    n: int,
    K: int,
    *,
    workers: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> CprResult:
    """Minimum crossings of K_{m,n} over circular drawings with ``K`` arcs."""
    spec = CompleteBipartiteSpec(m, n)
    eff = effective_arcs(m, n, K)
    k = eff // 2
    best, argmax = maximize_subtrahend(m, n, k, workers=workers, max_pairs=max_pairs)
    return CprResult(
        spec=spec,
        requested_k=K,
        effective_k=eff,
        value=quadruple_count(m, n) - best,
        witnesses=tuple(argmax),
        lower_bound=theorem2_lower_bound(m, n, k),
    )


def balanced_parts(total: int, k: int) -> Tuple[int, ...]:
    """The most even multiset of ``k`` parts summing to ``total``, descending."""
    q, r = divmod(total, k)
    return (q + 1,) * r + (q,) * (k - r)


def is_balanced(parts: Sequence[int], total: int) -> bool:
    return tuple(sorted(parts, reverse=True)) == balanced_parts(total, len(parts))


def balanced_profiles(m: int, n: int, k: int) -> List[ArcProfile]:
    """Canonical arrangements of the balanced pink and black multisets."""
    if k < 1:
        raise InvalidInputError(f"k must be >= 1 (got {k})")
    pinks = set(permutations(balanced_parts(m, k)))
    blacks = set(permutations(balanced_parts(n, k)))
    return sorted({canonical_profile(ArcProfile(k, p, b)) for p in pinks for b in blacks})


def best_balanced(m: int, n: int, k: int) -> Tuple[int, Optional[ArcProfile]]:
    """Largest subtrahend achievable by a balanced profile, with the least witness."""
    scored = [(eq1_subtrahend(p), p) for p in balanced_profiles(m, n, k)]
    top = max(s for s, _ in scored)
    return top, min(p for s, p in scored if s == top)
