r"""Ordinal patterns and window symbolization.

A window takes ``m`` samples spaced ``tau`` apart, so it spans
``L = (m - 1) * tau`` samples; consecutive windows slide by ``w``. A series
of length ``N`` yields ``floor((N - L - 1) / w) + 1`` windows, each reduced
to the permutation describing the relative order of its values
(Bandt-Pompe style symbolic dynamics).

Two equivalent ranking schemes are supported:

* ``chronological``: list the 1-based window positions of the values
  sorted in ascending amplitude. ``(1.0, 3.0, 2.0) -> (1, 3, 2)``.
* ``amplitude``: per-position ranks, rank 1 for the highest value and
  rank m for the lowest. ``(1.0, 3.0, 2.0) -> (3, 1, 2)``.

Ties are broken by treating the earlier index as the smaller value.
Patterns are stored canonically in chronological form (one hashable key
per partition regardless of display scheme); the amplitude rendering is
derived on demand via :func:`chron_to_amplitude`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, TooShortError
from .series import TimeSeries

RANKINGS = ("amplitude", "chronological")


@dataclass(frozen=True, order=True)
class OrdinalPattern:
    """A permutation of 1..m identifying one ordinal partition."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))
        m = len(self.perm)
        if m < 2 or sorted(self.perm) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..m with m >= 2: {self.perm}")

    @property
    def m(self) -> int:
        return len(self.perm)

    def dashed(self) -> str:
        return "-".join(str(v) for v in self.perm)

    @classmethod
    def from_dashed(cls, text: str) -> "OrdinalPattern":
        try:
            values = tuple(int(part) for part in text.strip().split("-"))
        except ValueError:
            raise ValueError(f"cannot parse pattern {text!r}; expected e.g. '4-3-2-1'") from None
        return cls(values)

    def __str__(self) -> str:
        return self.dashed()


def chron_to_amplitude(pattern: OrdinalPattern) -> OrdinalPattern:
    """Amplitude rendering of a chronological pattern.

    If position j has ascending rank r_j, its amplitude rank is m + 1 - r_j.
    """
    m = pattern.m
    ascending_rank = [0] * m
    for rank, idx in enumerate(pattern.perm, start=1):
        ascending_rank[idx - 1] = rank
    return OrdinalPattern(tuple(m + 1 - r for r in ascending_rank))


def amplitude_to_chron(pattern: OrdinalPattern) -> OrdinalPattern:
    """Inverse of :func:`chron_to_amplitude`."""
    m = pattern.m
    chron = [0] * m
    for idx, amp_rank in enumerate(pattern.perm, start=1):
        chron[m - amp_rank] = idx
    return OrdinalPattern(tuple(chron))


def pattern_of_window(values, ranking: str = "chronological") -> OrdinalPattern:
    """Ordinal pattern of a single window under the requested ranking."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError(f"window must be a 1-d sequence of length >= 2, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("window contains non-finite values")
    if ranking not in RANKINGS:
        raise ValueError(f"ranking must be one of {RANKINGS}, got {ranking!r}")
    # stable ascending argsort implements the earlier-index-is-smaller tie rule
    order = np.argsort(arr, kind="stable")
    chron = OrdinalPattern(tuple(int(i) + 1 for i in order))
    if ranking == "chronological":
        return chron
    return chron_to_amplitude(chron)


@dataclass(frozen=True)
class WindowConfig:
    """Window geometry and display ranking for symbolization.

    Defaults match the main Lorenz experiment: windows of 4 samples spaced
    6 apart, sliding by 1, displayed chronologically.
    """

    m: int = 4
    tau: int = 6
    w: int = 1
    ranking: str = "chronological"

    def __post_init__(self):
        if not 2 <= self.m <= 15:
            # pattern keys are base-(m+1) int64 codes; 15 is the overflow bound
            raise ConfigError(f"m must lie in [2, 15], got {self.m}")
        if self.tau < 1:
            raise ConfigError(f"tau must be at least 1, got {self.tau}")
        if self.w < 1:
            raise ConfigError(f"w must be at least 1, got {self.w}")
        if self.ranking not in RANKINGS:
            raise ConfigError(f"ranking must be one of {RANKINGS}, got {self.ranking!r}")

    @property
    def span(self) -> int:
        """Samples covered by one window minus one: (m - 1) * tau."""
        return (self.m - 1) * self.tau


def window_count(n: int, cfg: WindowConfig) -> int:
    """Number of windows a length-n series yields under cfg."""
    if n < cfg.span + 1:
        return 0
    return (n - cfg.span - 1) // cfg.w + 1


def encode_perm_rows(rows: np.ndarray) -> np.ndarray:
    """Pack permutation rows into int64 keys preserving lexicographic order."""
    m = rows.shape[1]
    weights = (m + 1) ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return rows.astype(np.int64) @ weights


def pattern_code(pattern: OrdinalPattern) -> int:
    return int(encode_perm_rows(np.asarray([pattern.perm]))[0])


def decode_pattern(code: int, m: int) -> OrdinalPattern:
    base = m + 1
    digits = []
    for _ in range(m):
        code, digit = divmod(code, base)
        digits.append(int(digit))
    return OrdinalPattern(tuple(reversed(digits)))


@dataclass(eq=False)
class SymbolSequence:
    """Per-window ordinal patterns of one series.

    ``codes`` holds the canonical chronological pattern of each window as an
    int64 key (lexicographic pattern order equals numeric key order);
    ``start_indices[k]`` is the source index anchoring window k. The display
    ranking lives in ``config`` and only affects rendering.
    """

    codes: np.ndarray
    start_indices: np.ndarray
    source_len: int
    config: WindowConfig

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def symbols(self) -> list[OrdinalPattern]:
        return [decode_pattern(int(c), self.config.m) for c in self.codes]

    def symbol(self, k: int) -> OrdinalPattern:
        return decode_pattern(int(self.codes[k]), self.config.m)


def symbolize(series: TimeSeries, cfg: WindowConfig | None = None) -> SymbolSequence:
    """Slide windows over the series and rank each one.

    Raises :class:`TooShortError` when the series cannot host a single
    window, i.e. when it has fewer than (m - 1) * tau + 1 samples.
    """
    cfg = cfg or WindowConfig()
    n = len(series.samples)
    if n < cfg.span + 1:
        raise TooShortError(
            f"need at least {cfg.span + 1} samples for m={cfg.m}, tau={cfg.tau}; got {n}"
        )
    count = window_count(n, cfg)
    starts = np.arange(count, dtype=np.int64) * cfg.w
    offsets = np.arange(cfg.m, dtype=np.int64) * cfg.tau
    windows = series.samples[starts[:, None] + offsets[None, :]]
    order = np.argsort(windows, axis=1, kind="stable")
    codes = encode_perm_rows(order + 1)
    return SymbolSequence(codes=codes, start_indices=starts, source_len=n, config=cfg)


def distinct_patterns(seq: SymbolSequence) -> list[tuple[OrdinalPattern, int]]:
    """Occurring patterns with their window counts, in lexicographic order."""
    uniq, counts = np.unique(seq.codes, return_counts=True)
    return [
        (decode_pattern(int(code), seq.config.m), int(count))
        for code, count in zip(uniq, counts)
    ]


def display_pattern(pattern: OrdinalPattern, ranking: str) -> OrdinalPattern:
    """Render a canonical (chronological) pattern under the given scheme."""
    if ranking not in RANKINGS:
        raise ValueError(f"ranking must be one of {RANKINGS}, got {ranking!r}")
    if ranking == "chronological":
        return pattern
    return chron_to_amplitude(pattern)


def canonical_pattern(pattern: OrdinalPattern, ranking: str) -> OrdinalPattern:
    """Map a user-facing pattern in the given scheme to canonical form."""
    if ranking not in RANKINGS:
        raise ValueError(f"ranking must be one of {RANKINGS}, got {ranking!r}")
    if ranking == "chronological":
        return pattern
    return amplitude_to_chron(pattern)
