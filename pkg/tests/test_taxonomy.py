"""Sample validation, scenario keys, and dataset partitioning."""

import pytest

from mmwpl.errors import DataError
from mmwpl.taxonomy import (
    MEASURED_PAIRS,
    Dataset,
    Environment,
    Layout,
    PathLossSample,
    Polarization,
    PolarizationClass,
    ScenarioKey,
    ensure_fit_ready,
    measured_scenarios,
    partition_by_scenario,
    validate_sample,
)


def sample(freq=28.0, dist=10.0, loss=72.0, pol=Polarization.VV,
           env=Environment.NLOS, layout=Layout.CORRIDOR, **kw):
    return PathLossSample(freq, dist, loss, pol, env, layout, **kw)


class TestValidateSample:
    def test_accepts_typical_sample(self):
        assert validate_sample(sample()) == []

    def test_accepts_boundary_distance(self):
        assert validate_sample(sample(dist=1.0)) == []

    def test_rejects_sub_reference_distance(self):
        violations = validate_sample(sample(dist=0.5))
        assert len(violations) == 1
        assert "1 m" in violations[0]

    def test_rejects_nonpositive_path_loss(self):
        assert validate_sample(sample(loss=0.0))
        assert validate_sample(sample(loss=-3.0))

    def test_rejects_nonfinite_fields(self):
        assert validate_sample(sample(freq=float("nan")))
        assert validate_sample(sample(dist=float("inf")))
        assert validate_sample(sample(loss=float("nan")))

    def test_collects_multiple_violations(self):
        bad = sample(freq=-1.0, dist=0.2, loss=0.0)
        assert len(validate_sample(bad)) == 3

    def test_ids_are_optional_metadata(self):
        tagged = sample(tx_id="TX2", rx_id="RX11")
        assert validate_sample(tagged) == []
        assert tagged.tx_id == "TX2"


class TestMeasuredScenarios:
    def test_fifteen_keys(self):
        keys = measured_scenarios()
        assert len(keys) == 15
        assert len(set(keys)) == 15

    def test_grid_content(self):
        keys = set(measured_scenarios())
        # every polarization class covers the same five environment/layout pairs
        for pol in PolarizationClass:
            pairs = {(k.environment, k.layout) for k in keys
                     if k.polarization_class is pol}
            assert pairs == set(MEASURED_PAIRS)

    def test_los_closed_plan_not_measured(self):
        keys = measured_scenarios()
        assert all(
            not (k.environment is Environment.LOS and k.layout is Layout.CLOSED_PLAN)
            for k in keys
        )
        # the key itself stays representable
        unmeasured = ScenarioKey(
            Environment.LOS, Layout.CLOSED_PLAN, PolarizationClass.VV
        )
        assert unmeasured.label() == "LOS:CP:VV"

    def test_order_is_deterministic(self):
        assert measured_scenarios() == measured_scenarios()


class TestPartition:
    def make_mixed(self):
        return Dataset(
            (
                sample(pol=Polarization.VV, dist=5.0),
                sample(pol=Polarization.VH, dist=6.0),
                sample(pol=Polarization.VV, dist=7.0),
                sample(pol=Polarization.VV, env=Environment.LOS, dist=8.0),
                sample(pol=Polarization.VH, dist=9.0),
            ),
            provenance="unit",
        )

    def test_single_polarization_selection(self):
        ds = self.make_mixed()
        key = ScenarioKey(Environment.NLOS, Layout.CORRIDOR, PolarizationClass.VV)
        part = partition_by_scenario(ds, key)
        assert [s.distance_m for s in part] == [5.0, 7.0]

    def test_combined_takes_both_polarizations(self):
        ds = self.make_mixed()
        key = ScenarioKey(Environment.NLOS, Layout.CORRIDOR, PolarizationClass.COMBINED)
        part = partition_by_scenario(ds, key)
        assert [s.distance_m for s in part] == [5.0, 6.0, 7.0, 9.0]

    def test_empty_partition_is_fine(self):
        ds = self.make_mixed()
        key = ScenarioKey(Environment.LOS, Layout.CLOSED_PLAN, PolarizationClass.VV)
        assert len(partition_by_scenario(ds, key)) == 0

    def test_provenance_records_selection(self):
        ds = self.make_mixed()
        key = ScenarioKey(Environment.NLOS, Layout.CORRIDOR, PolarizationClass.VH)
        assert partition_by_scenario(ds, key).provenance == "unit[NLOS:CO:VH]"

    def test_partitions_tile_the_dataset(self):
        ds = self.make_mixed()
        total = 0
        for env, layout in MEASURED_PAIRS:
            for pol in (PolarizationClass.VV, PolarizationClass.VH):
                key = ScenarioKey(env, layout, pol)
                total += len(partition_by_scenario(ds, key))
        assert total == len(ds)

    def test_combined_cardinality_is_vv_plus_vh(self):
        ds = self.make_mixed()
        for env, layout in MEASURED_PAIRS:
            vv = partition_by_scenario(
                ds, ScenarioKey(env, layout, PolarizationClass.VV)
            )
            vh = partition_by_scenario(
                ds, ScenarioKey(env, layout, PolarizationClass.VH)
            )
            both = partition_by_scenario(
                ds, ScenarioKey(env, layout, PolarizationClass.COMBINED)
            )
            assert len(both) == len(vv) + len(vh)


class TestDataset:
    def test_frequencies_sorted_unique(self):
        ds = Dataset((sample(freq=73.0), sample(freq=28.0), sample(freq=73.0)))
        assert ds.frequencies() == (28.0, 73.0)

    def test_arrays_align_with_samples(self):
        ds = Dataset((sample(freq=28.0, dist=4.0, loss=70.0),
                      sample(freq=73.0, dist=8.0, loss=90.0)))
        f, d, pl = ds.arrays()
        assert list(f) == [28.0, 73.0]
        assert list(d) == [4.0, 8.0]
        assert list(pl) == [70.0, 90.0]

    def test_ensure_fit_ready_rejects_empty(self):
        with pytest.raises(DataError, match="empty"):
            ensure_fit_ready(Dataset(()), "op")

    def test_ensure_fit_ready_reports_first_bad_index(self):
        ds = Dataset((sample(), sample(dist=0.5), sample(loss=-1.0)))
        with pytest.raises(DataError, match="index 1"):
            ensure_fit_ready(ds, "op")
