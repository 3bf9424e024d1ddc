"""Uniformly sampled scalar series: container, file ingestion, serialization."""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, ParseError, TooShortError

_DT_COMMENT = re.compile(r"dt\s*=\s*([^\s,]+)")


@dataclass(eq=False)
class TimeSeries:
    """Scalar samples taken at a constant interval ``dt``.

    ``origin_time`` is the timestamp of ``samples[0]``; it matters only for
    bookkeeping after transient removal. Samples are coerced to float64 and
    must all be finite.
    """

    samples: np.ndarray
    dt: float
    origin_time: float = 0.0

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ValueError(f"samples must be one-dimensional, got shape {self.samples.shape}")
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        finite = np.isfinite(self.samples)
        if not finite.all():
            bad = int(np.flatnonzero(~finite)[0])
            raise ValueError(f"non-finite sample at index {bad}")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def times(self) -> np.ndarray:
        return self.origin_time + self.dt * np.arange(len(self.samples))


def load_series(path, format: str = "csv", dt: float | None = None) -> TimeSeries:
    """Read a single-column series file.

    One numeric value per row. Lines starting with ``#`` are comments; a
    comment of the form ``# dt=0.01`` supplies the sample interval when the
    caller does not. A single non-numeric header row is skipped. Any other
    non-numeric cell raises :class:`ParseError` naming the physical row.
    """
    if format not in ("csv", "whitespace"):
        raise ValueError(f"format must be 'csv' or 'whitespace', got {format!r}")
    path = Path(path)
    header_dt = None
    header_skipped = False
    values: list[float] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                match = _DT_COMMENT.search(line)
                if match:
                    header_dt = float(match.group(1))
                continue
            cells = line.split(",") if format == "csv" else line.split()
            cells = [c.strip() for c in cells if c.strip()]
            if len(cells) != 1:
                raise ParseError(
                    f"expected one value per row, row {lineno} has {len(cells)}", row=lineno
                )
            try:
                value = float(cells[0])
            except ValueError:
                if not values and not header_skipped:
                    header_skipped = True
                    continue
                raise ParseError(
                    f"non-numeric value {cells[0]!r} at row {lineno}", row=lineno
                ) from None
            if not math.isfinite(value):
                raise ParseError(f"non-finite value at row {lineno}", row=lineno)
            values.append(value)
    if len(values) < 2:
        raise TooShortError(f"{path} holds {len(values)} samples; at least 2 required")
    if dt is None:
        dt = header_dt
    if dt is None:
        raise ConfigError(f"dt not given and no '# dt=...' header found in {path}")
    return TimeSeries(np.asarray(values), dt)


def dump_series(series: TimeSeries, path) -> None:
    """Write the canonical single-column form read back by :func:`load_series`."""
    lines = [f"# dt={series.dt:.17g}", "x"]
    lines.extend(f"{v:.17g}" for v in series.samples)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def series_sha256(series: TimeSeries) -> str:
    """Content hash of the samples and interval, independent of file layout."""
    digest = hashlib.sha256()
    digest.update(np.ascontiguousarray(series.samples, dtype="<f8").tobytes())
    digest.update(f"dt={series.dt:.17g}".encode())
    return digest.hexdigest()
