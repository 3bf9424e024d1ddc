r"""Per-partition sub-series entropies and entropy-level grouping.

Each ordinal partition of a series is treated as a candidate surface of
section. Collecting the samples at every window start that carries the
partition's pattern gives its sub-series; the permutation entropy h of
that sub-series (computed on a small secondary window, by default m=3,
tau=1, w=1, chronological) measures how regularly the partition is
visited.

Raw h ignores how much of the series a partition covers, so two weighted
variants rescale it by coverage shares:

    occurrence share   K     = windows carrying the pattern / all windows
    entry share        K^    = entrances into the pattern / all entrances

    weighted entropy             h_w  = -sum_i K  * p_i * (log2 p_i + log2 K)
    transition-weighted entropy  h_wt = -sum_i K^ * p_i * (log2 p_i + log2 K^)

where p_i is the occupancy distribution of the sub-series network. An
entrance is a window whose pattern differs from its predecessor's; the
first window counts. The formulas are applied literally; contributions
are not clamped even where a term goes negative.

Partitions whose sub-series cannot host two secondary windows are flagged
degenerate and given zero entropies.

Sorting partitions by a weighted entropy typically shows plateaus
separated by sharp drops. :func:`detect_levels` formalizes that: split the
descending list at the largest consecutive gaps exceeding
``gap_fraction * top_value``, using at most ``max_levels`` groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .encoding import (
    OrdinalPattern,
    SymbolSequence,
    WindowConfig,
    distinct_patterns,
    pattern_code,
    symbolize,
)
from .errors import PatternAbsentError
from .network import build_opn, markov_estimate, permutation_entropy
from .series import TimeSeries


@dataclass(frozen=True)
class SubSeriesConfig:
    """Secondary window used on every partition sub-series."""

    m: int = 3
    tau: int = 1
    w: int = 1

    def min_samples(self) -> int:
        """Fewest sub-series samples that still yield two secondary windows."""
        return (self.m - 1) * self.tau + 1 + self.w

    def window(self) -> WindowConfig:
        return WindowConfig(m=self.m, tau=self.tau, w=self.w, ranking="chronological")


@dataclass(frozen=True)
class CorpusCounts:
    """Denominators for the coverage shares."""

    total_windows: int
    total_entries: int


@dataclass(eq=False)
class PartitionReport:
    """Everything measured about one ordinal partition.

    ``occurrence_share`` and ``entry_share`` are K and K^ above. Levels are
    1-based, 1 being the highest-entropy group; they default to 1 until
    :func:`assign_levels` runs.
    """

    pattern: OrdinalPattern
    occurrence: int
    entries: int
    occurrence_share: float
    entry_share: float
    entropy: float
    weighted_entropy: float
    transition_entropy: float
    entry_indices: np.ndarray = field(repr=False)
    degenerate: bool = False
    weighted_level: int = 1
    transition_level: int = 1


def entry_mask(codes: np.ndarray) -> np.ndarray:
    """True where a window's pattern differs from its predecessor's."""
    mask = np.empty(codes.shape, dtype=bool)
    if codes.size:
        mask[0] = True
        mask[1:] = codes[1:] != codes[:-1]
    return mask


def corpus_counts(seq: SymbolSequence) -> CorpusCounts:
    return CorpusCounts(
        total_windows=len(seq.codes),
        total_entries=int(entry_mask(seq.codes).sum()),
    )


def entry_points(seq: SymbolSequence, pattern: OrdinalPattern) -> np.ndarray:
    """Start indices of windows that enter the pattern; may be empty."""
    code = pattern_code(pattern)
    selector = (seq.codes == code) & entry_mask(seq.codes)
    return seq.start_indices[selector]


def extract_subseries(
    series: TimeSeries, seq: SymbolSequence, pattern: OrdinalPattern
) -> TimeSeries:
    """Samples at every window start carrying the pattern, in order.

    The gaps between visits are spliced out, so dt is only nominal.
    """
    code = pattern_code(pattern)
    selector = seq.codes == code
    if not selector.any():
        raise PatternAbsentError(f"pattern {pattern.dashed()} does not occur")
    return TimeSeries(series.samples[seq.start_indices[selector]].copy(), series.dt)


def weighted_entropies(
    series: TimeSeries,
    seq: SymbolSequence,
    pattern: OrdinalPattern,
    sub_cfg: SubSeriesConfig | None = None,
    corpus: CorpusCounts | None = None,
) -> PartitionReport:
    """Measure one partition: shares, sub-series entropy, weighted variants."""
    sub_cfg = sub_cfg or SubSeriesConfig()
    corpus = corpus or corpus_counts(seq)
    code = pattern_code(pattern)
    occurrence = int((seq.codes == code).sum())
    if occurrence == 0:
        raise PatternAbsentError(f"pattern {pattern.dashed()} does not occur")
    entry_idx = entry_points(seq, pattern)
    share = occurrence / corpus.total_windows
    entry_share = len(entry_idx) / corpus.total_entries
    sub = extract_subseries(series, seq, pattern)
    if len(sub) < sub_cfg.min_samples():
        h = h_w = h_wt = 0.0
        degenerate = True
    else:
        est = markov_estimate(build_opn(symbolize(sub, sub_cfg.window())))
        h = permutation_entropy(est)
        p = est.occupancy[est.occupancy > 0.0]
        h_w = float(-(share * p * (np.log2(p) + math.log2(share))).sum()) + 0.0
        h_wt = float(-(entry_share * p * (np.log2(p) + math.log2(entry_share))).sum()) + 0.0
        degenerate = False
    return PartitionReport(
        pattern=pattern,
        occurrence=occurrence,
        entries=len(entry_idx),
        occurrence_share=share,
        entry_share=entry_share,
        entropy=h,
        weighted_entropy=h_w,
        transition_entropy=h_wt,
        entry_indices=entry_idx,
        degenerate=degenerate,
    )


RANK_KEYS = ("weighted_entropy", "transition_entropy")
LEVEL_KEYS = ("weighted_level", "transition_level")


def rank_partitions(reports: list[PartitionReport], by: str = "transition_entropy") -> list[PartitionReport]:
    """Stable descending sort by the chosen entropy, ties lexicographic."""
    if by not in RANK_KEYS:
        raise ValueError(f"by must be one of {RANK_KEYS}, got {by!r}")
    return sorted(reports, key=lambda r: (-getattr(r, by), r.pattern.perm))


def detect_levels(
    sorted_entropies, gap_fraction: float = 0.15, max_levels: int = 3
) -> list[int]:
    """Group a descending entropy list at its largest qualifying gaps.

    A gap qualifies when it exceeds gap_fraction times the top entropy;
    the largest max_levels - 1 qualifying gaps (earliest first on ties)
    become boundaries. No qualifying gap means a single level, so a list
    of nearly equal values stays one plateau however small its spread.
    Labels start at 1 for the highest-entropy group. The grouping is
    invariant under rescaling all entropies by a positive constant.
    """
    e = np.asarray(list(sorted_entropies), dtype=np.float64)
    if e.size == 0:
        raise ValueError("entropy list is empty")
    if not 0.0 < gap_fraction < 1.0:
        raise ValueError(f"gap_fraction must lie in (0, 1), got {gap_fraction}")
    if max_levels < 1:
        raise ValueError(f"max_levels must be at least 1, got {max_levels}")
    if np.any(e[1:] > e[:-1]):
        raise ValueError("entropies must be sorted in descending order")
    gaps = e[:-1] - e[1:]
    threshold = gap_fraction * e[0]
    qualifying = np.flatnonzero(gaps > threshold)
    chosen = sorted(qualifying, key=lambda i: (-gaps[i], i))[: max_levels - 1]
    labels = np.ones(e.size, dtype=np.int64)
    for boundary in sorted(chosen):
        labels[boundary + 1 :] += 1
    return [int(v) for v in labels]


def assign_levels(
    reports: list[PartitionReport], gap_fraction: float = 0.15, max_levels: int = 3
) -> list[PartitionReport]:
    """Label every report with its level under both entropy variants."""
    for by, attr in zip(RANK_KEYS, LEVEL_KEYS):
        ranked = rank_partitions(reports, by)
        labels = detect_levels([getattr(r, by) for r in ranked], gap_fraction, max_levels)
        for report, label in zip(ranked, labels):
            setattr(report, attr, label)
    return reports


def analyze_partitions(
    series: TimeSeries,
    seq: SymbolSequence,
    sub_cfg: SubSeriesConfig | None = None,
    gap_fraction: float = 0.15,
    max_levels: int = 3,
) -> list[PartitionReport]:
    """Report on every occurring partition, levels assigned, in pattern order."""
    corpus = corpus_counts(seq)
    reports = [
        weighted_entropies(series, seq, pattern, sub_cfg, corpus)
        for pattern, _ in distinct_patterns(seq)
    ]
    return assign_levels(reports, gap_fraction=gap_fraction, max_levels=max_levels)
