"""Comparison reports and fixed-width table rendering.

A FitReport is a flat collection of fitted (or preset) model rows tagged
with their scenario, frequency class, and data source. Four render styles
mirror the published comparison layouts:

  table3  single-frequency CI next to FI, with the sigma gap column
  table4  single-frequency cross-polarized CIX
  table5  multi-frequency families per environment and layout
  table6  multi-frequency families on combined-polarization data

Numbers are rendered at the published precision: exponents, intercepts,
sigma, and XPD to one decimal, the frequency weighting b to two, f0 to
whole GHz, ties away from zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DataError, NumericalError, UsageError
from .models import AbgParams, CifParams, CiParams, FiParams, XpdExtension
from .numformat import format_fixed
from .taxonomy import (
    MEASURED_PAIRS,
    Environment,
    Layout,
    PolarizationClass,
    ScenarioKey,
)

TABLE_STYLES = ("table3", "table4", "table5", "table6")

# slack below which a negative sigma gap is attributed to rounding
DELTA_SIGMA_SLACK_DB = 0.05

_POL_LABELS = {
    PolarizationClass.VV: "V-V",
    PolarizationClass.VH: "V-H",
    PolarizationClass.COMBINED: "Comb.",
}

_LAYOUT_LABELS = {
    Layout.CORRIDOR: "co",
    Layout.OPEN_PLAN: "op",
    Layout.CLOSED_PLAN: "cp",
}


@dataclass(frozen=True)
class FitRow:
    """One fitted model tied to the data slice that produced it.

    freq_ghz is the single frequency the fit used, or None for a
    multi-frequency fit. source identifies the sample set so that rows can
    be checked for having been fitted on identical data.
    """

    family: str
    scenario: ScenarioKey
    params: object
    freq_ghz: Optional[float] = None
    n_samples: Optional[int] = None
    source: str = ""

    @property
    def sigma_db(self) -> float:
        return self.params.sigma_db


@dataclass(frozen=True)
class FitReport:
    """An ordered set of fit rows, renderable as comparison tables."""

    rows: tuple[FitRow, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.rows)

    def find(
        self,
        family: Optional[str] = None,
        scenario: Optional[ScenarioKey] = None,
        freq_ghz: Optional[float] = "any",
    ) -> tuple[FitRow, ...]:
        """Rows matching the given family, scenario, and frequency class.

        freq_ghz defaults to matching anything; pass None to select
        multi-frequency rows explicitly.
        """
        out = []
        for row in self.rows:
            if family is not None and row.family != family:
                continue
            if scenario is not None and row.scenario != scenario:
                continue
            if not isinstance(freq_ghz, str):
                if freq_ghz is None:
                    if row.freq_ghz is not None:
                        continue
                elif row.freq_ghz != freq_ghz:
                    continue
            out.append(row)
        return tuple(out)

    def single(self, family, scenario=None, freq_ghz="any") -> FitRow:
        """The unique matching row; raises UsageError when absent or ambiguous."""
        rows = self.find(family, scenario, freq_ghz)
        if not rows:
            raise UsageError(f"no {family} row matches the request")
        if len(rows) > 1:
            raise UsageError(f"{family} selection is ambiguous ({len(rows)} rows)")
        return rows[0]


def delta_sigma(ci_row: FitRow, fi_row: FitRow) -> float:
    """Sigma gap sigma_CI - sigma_FI between fits of the same sample set.

    The two rows must really describe the same data (same scenario,
    frequency, sample count, and source), otherwise the gap is
    meaningless and a DataError is raised. Since FI nests CI's shape on
    single-frequency data the gap cannot be negative; anything below
    -DELTA_SIGMA_SLACK_DB indicates an internal inconsistency.
    """
    if ci_row.family != "CI" or fi_row.family != "FI":
        raise DataError("delta_sigma: expects one CI row and one FI row")
    same = (
        ci_row.scenario == fi_row.scenario
        and ci_row.freq_ghz == fi_row.freq_ghz
        and ci_row.n_samples == fi_row.n_samples
        and ci_row.source == fi_row.source
    )
    if not same:
        raise DataError(
            "delta_sigma: CI and FI rows were not fitted on the identical sample set"
        )
    gap = ci_row.sigma_db - fi_row.sigma_db
    if gap < -DELTA_SIGMA_SLACK_DB:
        raise NumericalError(
            f"delta_sigma: negative gap {gap:.3f} dB; "
            "FI cannot fit worse than CI on the same single-frequency data"
        )
    return gap


def _fmt(value, decimals) -> str:
    if value is None:
        return "-"
    return format_fixed(value, decimals)


def _freq_label(freq_ghz: float) -> str:
    return f"{freq_ghz:g} GHz"


def _report_freqs(report: FitReport) -> list[float]:
    return sorted({r.freq_ghz for r in report.rows if r.freq_ghz is not None})


def _grid_pairs(report: FitReport) -> list[tuple[Environment, Layout]]:
    """Environment/layout pairs to render: the measured grid first, then any
    extra pairs present in the report, in row order."""
    pairs = list(MEASURED_PAIRS)
    for row in report.rows:
        pair = (row.scenario.environment, row.scenario.layout)
        if pair not in pairs:
            pairs.append(pair)
    return pairs


def _render(headers: list[str], body: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [" | ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for row in body:
        lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _table3_body(report: FitReport) -> list[list[str]]:
    body = []
    for freq in _report_freqs(report):
        for pol in PolarizationClass:
            for env, layout in _grid_pairs(report):
                key = ScenarioKey(env, layout, pol)
                ci = report.find("CI", key, freq)
                fi = report.find("FI", key, freq)
                if not ci and not fi:
                    continue
                cells = [_freq_label(freq), _POL_LABELS[pol], env.value, _LAYOUT_LABELS[layout]]
                cells.append(_fmt(ci[0].params.ple_n if ci else None, 1))
                cells.append(_fmt(ci[0].sigma_db if ci else None, 1))
                cells.append(_fmt(fi[0].params.alpha_db if fi else None, 1))
                cells.append(_fmt(fi[0].params.beta_slope if fi else None, 1))
                cells.append(_fmt(fi[0].sigma_db if fi else None, 1))
                gap = None
                if ci and fi:
                    try:
                        gap = delta_sigma(ci[0], fi[0])
                    except DataError:
                        gap = None
                cells.append(_fmt(gap, 1))
                body.append(cells)
    return body


def _table4_body(report: FitReport) -> list[list[str]]:
    body = []
    for freq in _report_freqs(report):
        for env, layout in _grid_pairs(report):
            key = ScenarioKey(env, layout, PolarizationClass.VH)
            rows = report.find("CIX", key, freq)
            if not rows:
                continue
            ext = rows[0].params
            body.append(
                [
                    _freq_label(freq),
                    _POL_LABELS[PolarizationClass.VH],
                    env.value,
                    _LAYOUT_LABELS[layout],
                    _fmt(ext.base.ple_n, 1),
                    _fmt(ext.xpd_db, 1),
                    _fmt(rows[0].sigma_db, 1),
                ]
            )
    return body


def _family_param_cells(params) -> list[str]:
    """The three shared parameter columns (exponent, weighting/offset,
    reference/frequency exponent) for a multi-frequency table row."""
    base = params.base if isinstance(params, XpdExtension) else params
    if isinstance(base, CiParams):
        return [_fmt(base.ple_n, 1), "-", "-"]
    if isinstance(base, CifParams):
        return [_fmt(base.n, 1), _fmt(base.b, 2), _fmt(base.f0_ghz, 0)]
    if isinstance(base, AbgParams):
        return [_fmt(base.alpha_dist, 1), _fmt(base.beta_db, 1), _fmt(base.gamma_freq, 1)]
    return ["-", "-", "-"]


def _table5_body(report: FitReport) -> list[list[str]]:
    order = (
        ("CI", PolarizationClass.VV),
        ("CIX", PolarizationClass.VH),
        ("CIF", PolarizationClass.VV),
        ("CIFX", PolarizationClass.VH),
        ("ABG", PolarizationClass.VV),
        ("ABGX", PolarizationClass.VH),
    )
    body = []
    for env, layout in _grid_pairs(report):
        for family, pol in order:
            key = ScenarioKey(env, layout, pol)
            rows = report.find(family, key, None)
            if not rows:
                continue
            params = rows[0].params
            xpd = params.xpd_db if isinstance(params, XpdExtension) else None
            body.append(
                [
                    env.value,
                    _LAYOUT_LABELS[layout],
                    family,
                    _POL_LABELS[pol],
                    *_family_param_cells(params),
                    _fmt(xpd, 1),
                    _fmt(rows[0].sigma_db, 1),
                ]
            )
    return body


def _table6_body(report: FitReport) -> list[list[str]]:
    body = []
    for family in ("CI", "CIF", "ABG"):
        for env, layout in _grid_pairs(report):
            key = ScenarioKey(env, layout, PolarizationClass.COMBINED)
            rows = report.find(family, key, None)
            if not rows:
                continue
            body.append(
                [
                    family,
                    env.value,
                    _LAYOUT_LABELS[layout],
                    *_family_param_cells(rows[0].params),
                    _fmt(rows[0].sigma_db, 1),
                ]
            )
    return body


_STYLE_HEADERS = {
    "table3": [
        "Freq", "Pol", "Env", "L/O",
        "PLE", "sigma_CI [dB]", "alpha [dB]", "beta", "sigma_FI [dB]", "dsigma [dB]",
    ],
    "table4": ["Freq", "Pol", "Env", "L/O", "n_VV", "XPD [dB]", "sigma [dB]"],
    "table5": [
        "Env", "L/O", "Model", "Pol",
        "n/alpha", "b/beta [dB]", "f0/gamma", "XPD [dB]", "sigma [dB]",
    ],
    "table6": ["Model", "Env", "L/O", "n/alpha", "b/beta [dB]", "f0/gamma", "sigma [dB]"],
}

_STYLE_BODIES = {
    "table3": _table3_body,
    "table4": _table4_body,
    "table5": _table5_body,
    "table6": _table6_body,
}


def render_table(report: FitReport, style: str) -> str:
    """Render a report as a fixed-width comparison table.

    An empty report (or one with no rows matching the style) renders as
    the header only. Cells for models absent from the report show "-";
    the sigma gap column is computed, never stored, and only appears when
    the CI and FI rows come from the identical sample set.
    """
    if style not in TABLE_STYLES:
        raise UsageError(f"unknown table style {style!r}; expected one of {TABLE_STYLES}")
    return _render(_STYLE_HEADERS[style], _STYLE_BODIES[style](report))


def style_row_count(report: FitReport, style: str) -> int:
    """Number of body rows the style would render for this report."""
    if style not in TABLE_STYLES:
        raise UsageError(f"unknown table style {style!r}; expected one of {TABLE_STYLES}")
    return len(_STYLE_BODIES[style](report))
