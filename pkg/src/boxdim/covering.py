"""Greedy box covering of a network under a distance threshold.

A box of size ``box_size`` may hold two nodes only when their distance is
strictly below ``box_size``. Equivalently, nodes at distance >= box_size are
adjacent in an implicit dual graph, and a valid covering is a proper coloring
of that dual. The dual is never materialized: the greedy pass checks the
threshold directly against the distance matrix.

Greedy coloring is order-dependent, so trials reshuffle the node order with
independently seeded generators; results are identical for a fixed master
seed no matter how many workers run the trials.
"""
from __future__ import annotations

import logging
import multiprocessing
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _accel
from .metrics import DistanceMatrix

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_NODES = 12


@dataclass(frozen=True, eq=False)
class BoxCovering:
    """A valid covering: same-colored nodes lie pairwise closer than box_size."""

    box_size: int
    colors: np.ndarray
    box_count: int


@dataclass(frozen=True, eq=False)
class TrialStatistics:
    """Box counts over randomized greedy trials at one box size.

    ``counts[t]`` is the box count of trial ``t``; the summary fields use the
    population standard deviation.
    """

    box_size: int
    trials: int
    mean: float
    std: float
    min: int
    max: int
    counts: np.ndarray

    @classmethod
    def from_counts(cls, box_size: int, counts: np.ndarray) -> "TrialStatistics":
        counts = np.asarray(counts, dtype=np.int64)
        counts.setflags(write=False)
        return cls(
            box_size=int(box_size),
            trials=int(counts.size),
            mean=float(counts.mean()),
            std=float(counts.std()),
            min=int(counts.min()),
            max=int(counts.max()),
            counts=counts,
        )


def _greedy_color_permuted(dp: np.ndarray, box_size) -> tuple[np.ndarray, int]:
    """Color row-permuted distance matrix ``dp`` in index order.

    Each node takes the smallest color not used by any earlier node at
    distance >= box_size. Returns (colors in permuted order, color count).
    """
    n = dp.shape[0]
    colors = np.zeros(n, dtype=np.int64)
    if n == 0:
        return colors, 0
    ncolors = 1
    used = np.zeros(n + 1, dtype=bool)
    for i in range(1, n):
        far = colors[:i][dp[i, :i] >= box_size]
        if far.size:
            used[far] = True
            c = int(np.argmin(used[: ncolors + 1]))
            used[far] = False
        else:
            c = 0
        colors[i] = c
        if c == ncolors:
            ncolors += 1
    return colors, ncolors


def greedy_box_cover(dm: DistanceMatrix, box_size, order: Sequence[int]) -> BoxCovering:
    """Run one greedy covering pass over the nodes in the given order."""
    if box_size <= 0:
        raise ValueError("box_size must be positive")
    order = np.asarray(order, dtype=np.int64)
    n = dm.n
    if order.shape != (n,) or not np.array_equal(np.sort(order), np.arange(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    dp = dm.dist[order][:, order]
    colors_permuted, ncolors = _greedy_color_permuted(dp, box_size)
    colors = np.empty(n, dtype=np.int64)
    colors[order] = colors_permuted
    colors.setflags(write=False)
    return BoxCovering(box_size=box_size, colors=colors, box_count=ncolors)


def is_valid_covering(dm: DistanceMatrix, covering: BoxCovering) -> bool:
    """Check that every same-colored pair lies at distance < box_size."""
    colors = covering.colors
    same = colors[:, None] == colors[None, :]
    np.fill_diagonal(same, False)
    return not bool((dm.dist[same] >= covering.box_size).any())


def _working_matrix(dm: DistanceMatrix) -> np.ndarray:
    # int32 halves memory traffic in the trial loop; diameters this large
    # do not occur at the supported graph sizes, but stay exact if they do.
    if dm.diameter < 2**31:
        return dm.dist.astype(np.int32)
    return dm.dist


def _effective_sizes(box_sizes: Sequence[int], dm: DistanceMatrix) -> list[int]:
    # any threshold above the diameter behaves like diameter+1 (no conflicts),
    # which keeps comparisons inside the working dtype
    sizes = []
    for b in box_sizes:
        if b <= 0:
            raise ValueError("box sizes must be positive")
        sizes.append(min(int(b), dm.diameter + 1))
    return sizes


def _trial_counts(dist: np.ndarray, sizes: Sequence[int], master_seed: int, trial: int) -> np.ndarray:
    rng = np.random.default_rng((master_seed, trial))
    order = rng.permutation(dist.shape[0])
    out = np.empty(len(sizes), dtype=np.int64)
    if _accel.available():
        dp = _accel.permute_matrix(dist, order)
        _accel.greedy_counts(dp, np.asarray(sizes, dtype=np.int64), out)
    else:
        dp = dist[order][:, order]
        for j, b in enumerate(sizes):
            out[j] = _greedy_color_permuted(dp, b)[1]
    return out


# fork-shared state: set in the parent right before the pool is created
_FORK_STATE: tuple | None = None


def _forked_trial(trial: int) -> tuple[int, list[int]]:
    dist, sizes, master_seed = _FORK_STATE  # type: ignore[misc]
    return trial, _trial_counts(dist, sizes, master_seed, trial)


def covering_counts(
    dm: DistanceMatrix,
    box_sizes: Sequence[int],
    trials: int,
    master_seed: int,
    workers: int = 1,
) -> np.ndarray:
    """Greedy box counts for every (box_size, trial) pair.

    Trial ``t`` draws its node order from a generator seeded purely by
    (master_seed, t), and the result matrix is assembled by trial index, so
    the output is identical for any worker count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    sizes = _effective_sizes(box_sizes, dm)
    dist = _working_matrix(dm)
    counts = np.empty((len(sizes), trials), dtype=np.int64)

    workers = max(1, min(int(workers), trials))
    if workers > 1 and hasattr(os, "fork"):
        _accel.warmup()  # compile before forking so workers inherit the kernels
        global _FORK_STATE
        _FORK_STATE = (dist, sizes, master_seed)
        try:
            ctx = multiprocessing.get_context("fork")
            chunk = max(1, trials // (workers * 8))
            with ctx.Pool(processes=workers) as pool:
                for t, col in pool.imap_unordered(_forked_trial, range(trials), chunksize=chunk):
                    counts[:, t] = col
        finally:
            _FORK_STATE = None
    else:
        for t in range(trials):
            counts[:, t] = _trial_counts(dist, sizes, master_seed, t)
    return counts


def run_trials(
    dm: DistanceMatrix,
    box_size,
    trials: int,
    master_seed: int,
    workers: int = 1,
) -> TrialStatistics:
    """Randomized greedy coverings at one box size, aggregated over trials."""
    counts = covering_counts(dm, [box_size], trials, master_seed, workers=workers)
    return TrialStatistics.from_counts(box_size, counts[0])


def brute_force_min_boxes(dm: DistanceMatrix, box_size) -> int:
    """Exact minimum box count, by exhaustive search (test oracle).

    Branch-and-bound over canonical colorings of the implicit dual graph;
    limited to very small instances.
    """
    n = dm.n
    if n > BRUTE_FORCE_MAX_NODES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_NODES} nodes, got {n}")
    if box_size <= 0:
        raise ValueError("box_size must be positive")
    if n == 0:
        raise ValueError("empty distance matrix")

    conflict = dm.dist >= box_size
    np.fill_diagonal(conflict, False)
    # order nodes by conflict degree (descending) to tighten pruning
    node_order = sorted(range(n), key=lambda u: -int(conflict[u].sum()))
    masks = []
    for u in node_order:
        m = 0
        for v_pos, v in enumerate(node_order):
            if conflict[u, v]:
                m |= 1 << v_pos
        masks.append(m)

    best = n
    members = [0] * (n + 1)

    def search(i: int, ncolors: int) -> None:
        nonlocal best
        if ncolors >= best:
            return
        if i == n:
            best = ncolors
            return
        bit = 1 << i
        for c in range(ncolors):
            if not members[c] & masks[i]:
                members[c] |= bit
                search(i + 1, ncolors)
                members[c] &= ~bit
        members[ncolors] = bit
        search(i + 1, ncolors + 1)
        members[ncolors] = 0

    search(0, 0)
    return best
