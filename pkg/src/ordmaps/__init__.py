"""First return maps from ordinal partitions of scalar time series.

The analysis chain: integrate or load a scalar series, slide ordinal
windows over it, treat each occurring pattern as a candidate surface of
section, score partitions by weighted permutation entropies of their
sub-series, group them into entropy levels, and read first return maps
off the entry points of the good sections.
"""

from .embedding import (
    EmbeddingConfig,
    LORENZ_EMBEDDING,
    MACKEY_GLASS_EMBEDDING,
    ROSSLER_EMBEDDING,
    delay_embed,
    window_from_embedding,
)
from .encoding import (
    OrdinalPattern,
    SymbolSequence,
    WindowConfig,
    amplitude_to_chron,
    canonical_pattern,
    chron_to_amplitude,
    decode_pattern,
    display_pattern,
    distinct_patterns,
    pattern_code,
    pattern_of_window,
    symbolize,
    window_count,
)
from .errors import (
    ConfigError,
    DivergenceError,
    EmptyMapError,
    OrdmapsError,
    ParseError,
    PatternAbsentError,
    TooShortError,
)
from .levels import (
    LevelNetwork,
    build_level_network,
    entry_level_sequence,
    level_sequence,
)
from .network import (
    MarkovEstimate,
    TransitionCounts,
    build_opn,
    markov_estimate,
    permutation_entropy,
)
from .ranking import (
    CorpusCounts,
    PartitionReport,
    SubSeriesConfig,
    analyze_partitions,
    assign_levels,
    corpus_counts,
    detect_levels,
    entry_mask,
    entry_points,
    extract_subseries,
    rank_partitions,
    weighted_entropies,
)
from .returnmaps import (
    DiagonalSplit,
    ReturnMap,
    diagonal_split,
    wing_split,
    frm_from_entries,
    local_maxima_indices,
    maxima_frm,
)
from .series import TimeSeries, dump_series, load_series, series_sha256
from .sources import (
    LorenzParams,
    MackeyGlassParams,
    RosslerParams,
    SimulationConfig,
    delay_steps,
    integrate_lorenz,
    integrate_mackey_glass,
    integrate_rossler,
    kept_points,
)

__version__ = "0.1.0"

__all__ = [
    "CorpusCounts",
    "ConfigError",
    "DiagonalSplit",
    "DivergenceError",
    "EmbeddingConfig",
    "EmptyMapError",
    "LevelNetwork",
    "LorenzParams",
    "LORENZ_EMBEDDING",
    "MackeyGlassParams",
    "MACKEY_GLASS_EMBEDDING",
    "MarkovEstimate",
    "OrdinalPattern",
    "OrdmapsError",
    "ParseError",
    "PartitionReport",
    "PatternAbsentError",
    "ReturnMap",
    "RosslerParams",
    "ROSSLER_EMBEDDING",
    "SimulationConfig",
    "SubSeriesConfig",
    "SymbolSequence",
    "TimeSeries",
    "TooShortError",
    "TransitionCounts",
    "WindowConfig",
    "amplitude_to_chron",
    "analyze_partitions",
    "assign_levels",
    "build_level_network",
    "build_opn",
    "canonical_pattern",
    "chron_to_amplitude",
    "corpus_counts",
    "decode_pattern",
    "delay_embed",
    "delay_steps",
    "detect_levels",
    "diagonal_split",
    "wing_split",
    "display_pattern",
    "distinct_patterns",
    "dump_series",
    "entry_level_sequence",
    "entry_mask",
    "entry_points",
    "extract_subseries",
    "frm_from_entries",
    "integrate_lorenz",
    "integrate_mackey_glass",
    "integrate_rossler",
    "kept_points",
    "level_sequence",
    "load_series",
    "local_maxima_indices",
    "markov_estimate",
    "maxima_frm",
    "pattern_code",
    "pattern_of_window",
    "permutation_entropy",
    "rank_partitions",
    "series_sha256",
    "symbolize",
    "weighted_entropies",
    "window_count",
    "window_from_embedding",
]
