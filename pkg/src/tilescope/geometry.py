"""Interval-union outer approximations of the attractor of a digit set.

The attractor of ``x -> (x + d) / b`` over the digits lies inside the
hull ``[min/(b-1), max/(b-1)]``; pushing the hull through ``k`` rounds of
the maps covers it by one interval per level-``k`` expansion value.  The
approximations are nested, their total lengths are non-increasing, and
for a tile they never undershoot the exact measure ``1 / density`` of a
verified tiling set.  Endpoints are exact rationals with denominator
dividing ``b**k * (b - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DigitSet, PeriodicSet, expand
from .tiling import tile_measure

Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntervalUnion:
    """Disjoint, sorted closed intervals with exact rational endpoints."""

    level: int
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        for (alo, ahi), (blo, bhi) in zip(self.intervals, self.intervals[1:]):
            assert alo <= ahi and ahi < blo, "intervals must be disjoint and sorted"

    @property
    def total_length(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), start=Fraction(0))

    def covers(self, other: "IntervalUnion") -> bool:
        """Whether every interval of ``other`` lies inside this union."""
        mine = iter(self.intervals)
        cur = next(mine, None)
        for lo, hi in other.intervals:
            while cur is not None and cur[1] < lo:
                cur = next(mine, None)
            if cur is None or not (cur[0] <= lo and hi <= cur[1]):
                return False
        return True


def hull(d: DigitSet) -> Interval:
    """Fixed interval containing the attractor: ``[min, max] / (b - 1)``."""
    return Fraction(d.digits[0], d.base - 1), Fraction(d.digits[-1], d.base - 1)


def _merge(intervals: list[Interval]) -> tuple[Interval, ...]:
    # Touching intervals merge; total length is unaffected.
    merged: list[Interval] = []
    for lo, hi in intervals:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return tuple(merged)


def approx(d: DigitSet, level: int) -> IntervalUnion:
    """Level-``level`` outer cover: one hull copy per expansion value, merged."""
    lo, hi = hull(d)
    scale = d.base**level
    pieces = [
        (Fraction(v + lo, scale), Fraction(v + hi, scale))
        for v in expand(d, level).values
    ]
    return IntervalUnion(level, _merge(pieces))


@dataclass(frozen=True)
class MeasureReport:
    """Covered lengths per level, against the exact tile measure if known."""

    lengths: tuple[Fraction, ...]
    target: Fraction | None

    @property
    def gap(self) -> Fraction | None:
        return None if self.target is None else self.lengths[-1] - self.target


def measure_report(
    d: DigitSet, k_max: int, tiling_set: PeriodicSet | None = None
) -> MeasureReport:
    """Lengths of the level-1..k_max covers, with the 1/density target if given."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    lengths = tuple(approx(d, k).total_length for k in range(1, k_max + 1))
    target = None if tiling_set is None else tile_measure(tiling_set)
    return MeasureReport(lengths, target)


def intervals_json(d: DigitSet, unions: list[IntervalUnion]) -> dict:
    """JSON-ready structure: per level, intervals as [lo_num, lo_den, hi_num, hi_den]."""
    return {
        "base": d.base,
        "digits": list(d.digits),
        "levels": [
            {
                "k": u.level,
                "intervals": [
                    [lo.numerator, lo.denominator, hi.numerator, hi.denominator]
                    for lo, hi in u.intervals
                ],
                "total_length": [
                    u.total_length.numerator,
                    u.total_length.denominator,
                ],
            }
            for u in unions
        ],
    }


def tower_svg(
    d: DigitSet, unions: list[IntervalUnion], width: int = 800, height: int = 400
) -> str:
    """Static SVG 1.1 tower plot: one horizontal band per level.

    The x axis is linear over the hull; each interval becomes one
    rectangle in its level's band.
    """
    lo, hi = hull(d)
    span = hi - lo if hi > lo else Fraction(1)
    margin = 40
    plot_w = width - 2 * margin
    band_h = (height - 2 * margin) / max(len(unions), 1)

    def x_of(v: Fraction) -> float:
        return margin + float((v - lo) / span) * plot_w

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for row, u in enumerate(unions):
        y = margin + row * band_h
        parts.append(
            f'<text x="{margin - 32:.2f}" y="{y + band_h / 2:.2f}" '
            f'font-size="12" dominant-baseline="middle">k={u.level}</text>'
        )
        for ilo, ihi in u.intervals:
            x = x_of(ilo)
            w = max(x_of(ihi) - x, 0.5)
            parts.append(
                f'<rect x="{x:.2f}" y="{y + 2:.2f}" width="{w:.2f}" '
                f'height="{band_h - 4:.2f}" fill="#4878a8"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
