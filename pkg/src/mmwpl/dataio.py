"""CSV dataset exchange and JSON parameter serialization.

The CSV schema is fixed and ordered:

    freq_ghz,distance_m,path_loss_db,polarization,environment,layout,tx_id,rx_id

with '.' as the decimal point, UTF-8 text, and a mandatory header row.
tx_id and rx_id are free-form labels and may be empty. Strict ingestion
aborts on the first bad row or unknown column; lax ingestion skips bad
rows (collecting a report) and ignores unknown columns.

Parameters travel as JSON with a schema_version field, fixed key order,
and repr-roundtrip floats, so write -> read -> write is byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import NamedTuple, Optional, Union

from .errors import DataError
from .models import AbgParams, CifParams, CiParams, FiParams, XpdExtension
from .report import FitReport, FitRow
from .taxonomy import (
    Dataset,
    Environment,
    Layout,
    PathLossSample,
    Polarization,
    PolarizationClass,
    ScenarioKey,
    validate_sample,
)

CSV_COLUMNS = (
    "freq_ghz",
    "distance_m",
    "path_loss_db",
    "polarization",
    "environment",
    "layout",
    "tx_id",
    "rx_id",
)

PARAMS_SCHEMA_VERSION = 1

Source = Union[str, Path, io.TextIOBase]


class SkippedRow(NamedTuple):
    """One rejected data row: 1-based row index (header excluded) and why."""

    row: int
    reason: str


def _open_text(source: Source, mode: str):
    if isinstance(source, (str, Path)):
        return open(source, mode, encoding="utf-8", newline=""), True
    return source, False


def _enum_of(token: str, enum_cls, what: str):
    for member in enum_cls:
        if member.value == token:
            return member
    valid = "/".join(m.value for m in enum_cls)
    raise ValueError(f"unknown {what} token {token!r} (expected {valid})")


def _parse_row(record: dict[str, str]) -> PathLossSample:
    try:
        freq = float(record["freq_ghz"])
        dist = float(record["distance_m"])
        loss = float(record["path_loss_db"])
    except ValueError as exc:
        raise ValueError(f"unparseable numeric: {exc}") from None
    sample = PathLossSample(
        frequency_ghz=freq,
        distance_m=dist,
        path_loss_db=loss,
        polarization=_enum_of(record["polarization"].strip(), Polarization, "polarization"),
        environment=_enum_of(record["environment"].strip(), Environment, "environment"),
        layout=_enum_of(record["layout"].strip(), Layout, "layout"),
        tx_id=record.get("tx_id", "").strip() or None,
        rx_id=record.get("rx_id", "").strip() or None,
    )
    violations = validate_sample(sample)
    if violations:
        raise ValueError("; ".join(violations))
    return sample


def read_csv(source: Source, mode: str = "strict") -> tuple[Dataset, list[SkippedRow]]:
    """Read a sample dataset from a path or an open text stream.

    Returns (dataset, skipped): in strict mode skipped is always empty
    because the first bad row raises DataError; in lax mode bad rows are
    collected there instead. A header-only file gives an empty dataset.
    """
    if mode not in ("strict", "lax"):
        raise DataError(f"read_csv: unknown mode {mode!r}")
    stream, owned = _open_text(source, "r")
    try:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError("read_csv: missing header row") from None
        header = [h.strip() for h in header]
        unknown = [h for h in header if h not in CSV_COLUMNS]
        missing = [c for c in CSV_COLUMNS[:6] if c not in header]
        if unknown and mode == "strict":
            raise DataError(f"read_csv: unknown column(s) {unknown}")
        if missing:
            raise DataError(f"read_csv: missing required column(s) {missing}")
        samples: list[PathLossSample] = []
        skipped: list[SkippedRow] = []
        for index, raw in enumerate(reader, start=1):
            if not raw or all(not cell.strip() for cell in raw):
                continue
            if len(raw) != len(header):
                problem = f"expected {len(header)} fields, got {len(raw)}"
                if mode == "strict":
                    raise DataError(f"read_csv: row {index}: {problem}")
                skipped.append(SkippedRow(index, problem))
                continue
            record = dict(zip(header, raw))
            try:
                samples.append(_parse_row(record))
            except ValueError as exc:
                if mode == "strict":
                    raise DataError(f"read_csv: row {index}: {exc}") from None
                skipped.append(SkippedRow(index, str(exc)))
        name = getattr(stream, "name", None) or "<stream>"
        return Dataset(tuple(samples), provenance=str(name)), skipped
    finally:
        if owned:
            stream.close()


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(dataset: Dataset, dest: Source) -> None:
    """Write a dataset in the fixed schema; floats keep full precision."""
    stream, owned = _open_text(dest, "w")
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for s in dataset:
            writer.writerow(
                [
                    _cell(s.frequency_ghz),
                    _cell(s.distance_m),
                    _cell(s.path_loss_db),
                    s.polarization.value,
                    s.environment.value,
                    s.layout.value,
                    _cell(s.tx_id),
                    _cell(s.rx_id),
                ]
            )
    finally:
        if owned:
            stream.close()


def _params_fields(params) -> dict:
    if isinstance(params, CiParams):
        return {"model": "CI", "n": params.ple_n, "sigma_db": params.sigma_db,
                "d0_m": params.d0_m}
    if isinstance(params, FiParams):
        return {"model": "FI", "alpha_db": params.alpha_db, "beta": params.beta_slope,
                "sigma_db": params.sigma_db}
    if isinstance(params, AbgParams):
        return {"model": "ABG", "alpha": params.alpha_dist, "beta_db": params.beta_db,
                "gamma": params.gamma_freq, "sigma_db": params.sigma_db,
                "d0_m": params.d0_m}
    if isinstance(params, CifParams):
        return {"model": "CIF", "n": params.n, "b": params.b,
                "f0_ghz": params.f0_ghz, "sigma_db": params.sigma_db,
                "d0_m": params.d0_m}
    if isinstance(params, XpdExtension):
        return {"model": params.family, "base": _params_fields(params.base),
                "xpd_db": params.xpd_db, "sigma_db": params.sigma_db}
    raise DataError(f"write_params_json: unknown parameter type {type(params).__name__}")


def _params_from_fields(obj: dict):
    try:
        model = obj["model"]
        if model == "CI":
            return CiParams(obj["n"], obj["sigma_db"], obj.get("d0_m", 1.0))
        if model == "FI":
            return FiParams(obj["alpha_db"], obj["beta"], obj["sigma_db"])
        if model == "ABG":
            return AbgParams(obj["alpha"], obj["beta_db"], obj["gamma"],
                             obj["sigma_db"], obj.get("d0_m", 1.0))
        if model == "CIF":
            return CifParams(obj["n"], obj["b"], obj["f0_ghz"],
                             obj["sigma_db"], obj.get("d0_m", 1.0))
        if model in ("CIX", "ABGX", "CIFX"):
            return XpdExtension(_params_from_fields(obj["base"]),
                                obj["xpd_db"], obj["sigma_db"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"read_params_json: bad parameter object: {exc}") from None
    raise DataError(f"read_params_json: unknown model {obj.get('model')!r}")


def _row_to_json(row: FitRow) -> dict:
    return {
        "model": row.family,
        "freq_ghz": row.freq_ghz,
        "scenario": {
            "environment": row.scenario.environment.value,
            "layout": row.scenario.layout.value,
            "polarization": row.scenario.polarization_class.value,
        },
        "n_samples": row.n_samples,
        "source": row.source,
        "params": _params_fields(row.params),
    }


def _row_from_json(obj: dict) -> FitRow:
    try:
        sc = obj["scenario"]
        scenario = ScenarioKey(
            _enum_of(sc["environment"], Environment, "environment"),
            _enum_of(sc["layout"], Layout, "layout"),
            _enum_of(sc["polarization"], PolarizationClass, "polarization class"),
        )
        return FitRow(
            family=obj["model"],
            scenario=scenario,
            params=_params_from_fields(obj["params"]),
            freq_ghz=obj.get("freq_ghz"),
            n_samples=obj.get("n_samples"),
            source=obj.get("source", ""),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"read_params_json: bad report row: {exc}") from None


def dumps_params(report: FitReport) -> str:
    """Serialize a report with stable key order and repr-exact floats."""
    doc = {
        "schema_version": PARAMS_SCHEMA_VERSION,
        "rows": [_row_to_json(r) for r in report.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_params_json(report: FitReport, dest: Source) -> None:
    stream, owned = _open_text(dest, "w")
    try:
        stream.write(dumps_params(report))
    finally:
        if owned:
            stream.close()


def read_params_json(source: Source) -> FitReport:
    """Read a report back; floats survive the round trip unchanged."""
    stream, owned = _open_text(source, "r")
    try:
        try:
            doc = json.load(stream)
        except json.JSONDecodeError as exc:
            raise DataError(f"read_params_json: invalid JSON: {exc}") from None
    finally:
        if owned:
            stream.close()
    if not isinstance(doc, dict) or "rows" not in doc:
        raise DataError("read_params_json: not a parameter report document")
    version = doc.get("schema_version")
    if version != PARAMS_SCHEMA_VERSION:
        raise DataError(
            f"read_params_json: unsupported schema_version {version!r} "
            f"(expected {PARAMS_SCHEMA_VERSION})"
        )
    return FitReport(tuple(_row_from_json(r) for r in doc["rows"]))
