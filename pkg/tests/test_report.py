"""Sigma-gap bookkeeping and table rendering mechanics."""

import pytest

from mmwpl.errors import DataError, NumericalError, UsageError
from mmwpl.models import CiParams, FiParams
from mmwpl.numformat import format_fixed, round_half_away
from mmwpl.report import FitReport, FitRow, delta_sigma, render_table
from mmwpl.taxonomy import Environment, Layout, PolarizationClass, ScenarioKey

KEY = ScenarioKey(Environment.NLOS, Layout.CORRIDOR, PolarizationClass.VV)


def ci_row(sigma, **kw):
    defaults = dict(freq_ghz=28.0, n_samples=40, source="unit")
    defaults.update(kw)
    return FitRow("CI", KEY, CiParams(2.5, sigma), **defaults)


def fi_row(sigma, **kw):
    defaults = dict(freq_ghz=28.0, n_samples=40, source="unit")
    defaults.update(kw)
    return FitRow("FI", KEY, FiParams(40.7, 4.0, sigma), **defaults)


class TestDeltaSigma:
    def test_published_example(self):
        assert delta_sigma(ci_row(8.3), fi_row(7.5)) == pytest.approx(0.8)

    def test_zero_gap(self):
        assert delta_sigma(ci_row(5.0), fi_row(5.0)) == 0.0

    def test_requires_identical_sample_sets(self):
        with pytest.raises(DataError, match="identical"):
            delta_sigma(ci_row(8.3), fi_row(7.5, n_samples=39))
        with pytest.raises(DataError, match="identical"):
            delta_sigma(ci_row(8.3), fi_row(7.5, source="other"))
        with pytest.raises(DataError, match="identical"):
            delta_sigma(ci_row(8.3), fi_row(7.5, freq_ghz=73.0))

    def test_requires_ci_and_fi(self):
        with pytest.raises(DataError):
            delta_sigma(ci_row(8.3), ci_row(7.5))

    def test_small_negative_gap_is_rounding_slack(self):
        assert delta_sigma(ci_row(5.00), fi_row(5.04)) == pytest.approx(-0.04)

    def test_large_negative_gap_is_inconsistent(self):
        with pytest.raises(NumericalError, match="negative"):
            delta_sigma(ci_row(5.0), fi_row(6.0))


class TestRendering:
    def test_empty_report_renders_header_only(self):
        for style in ("table3", "table4", "table5", "table6"):
            text = render_table(FitReport(()), style)
            assert len(text.strip().splitlines()) == 2

    def test_unknown_style(self):
        with pytest.raises(UsageError):
            render_table(FitReport(()), "table9")

    def test_missing_model_cells_render_as_dash(self):
        report = FitReport((ci_row(8.3),))
        body = render_table(report, "table3").strip().splitlines()[2]
        cells = [c.strip() for c in body.split("|")]
        assert cells[4] == "2.5"
        assert cells[6] == "-"  # no FI fit present
        assert cells[9] == "-"  # so no sigma gap either

    def test_gap_cell_computed_when_rows_match(self):
        report = FitReport((ci_row(8.3), fi_row(7.5)))
        body = render_table(report, "table3").strip().splitlines()[2]
        cells = [c.strip() for c in body.split("|")]
        assert cells[-1] == "0.8"

    def test_gap_cell_dash_when_sample_sets_differ(self):
        report = FitReport((ci_row(8.3), fi_row(7.5, n_samples=12)))
        body = render_table(report, "table3").strip().splitlines()[2]
        cells = [c.strip() for c in body.split("|")]
        assert cells[-1] == "-"

    def test_columns_stay_aligned(self):
        report = FitReport((ci_row(8.3), fi_row(7.5)))
        lines = render_table(report, "table3").splitlines()
        pipe_cols = [i for i, ch in enumerate(lines[0]) if ch == "|"]
        for line in lines[2:]:
            assert [i for i, ch in enumerate(line) if ch == "|"] == pipe_cols


class TestNumberFormatting:
    def test_ties_go_away_from_zero(self):
        assert format_fixed(0.25, 1) == "0.3"
        assert format_fixed(-0.25, 1) == "-0.3"
        assert format_fixed(50.5, 0) == "51"
        assert format_fixed(0.15, 1) == "0.2"

    def test_trailing_zeros_kept(self):
        assert format_fixed(0.2, 2) == "0.20"
        assert format_fixed(3.0, 1) == "3.0"
        assert format_fixed(50.0, 0) == "50"

    def test_negative_zero_never_printed(self):
        assert format_fixed(-0.001, 1) == "0.0"
        assert format_fixed(-1e-16, 2) == "0.00"

    def test_round_half_away_values(self):
        assert round_half_away(50.5, 0) == 51.0
        assert round_half_away(-50.5, 0) == -51.0
        assert round_half_away(61.75, 0) == 62.0
        assert round_half_away(2.25, 1) == 2.3
