"""Measurement data model: samples, datasets, and scenario partitioning.

Units are fixed package-wide: frequency in GHz, distance in meters, path
loss in dB. A scenario is the triple (environment, layout, polarization
class); polarization class is a dataset-level selection, so "Combined"
never appears on an individual sample, it selects the union of V-V and
V-H samples.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import DataError

MIN_DISTANCE_M = 1.0  # close-in reference distance; the models are undefined below it


class Environment(enum.Enum):
    LOS = "LOS"
    NLOS = "NLOS"


class Layout(enum.Enum):
    """Antenna placement context: corridor, open-plan office, closed-plan office."""

    CORRIDOR = "CO"
    OPEN_PLAN = "OP"
    CLOSED_PLAN = "CP"


class Polarization(enum.Enum):
    """Antenna polarization of one sample: co-polarized or cross-polarized."""

    VV = "VV"
    VH = "VH"


class PolarizationClass(enum.Enum):
    """Dataset-level polarization selection; COMBINED takes V-V and V-H together."""

    VV = "VV"
    VH = "VH"
    COMBINED = "Comb"

    def matches(self, polarization: Polarization) -> bool:
        if self is PolarizationClass.COMBINED:
            return True
        return self.value == polarization.value


@dataclass(frozen=True)
class PathLossSample:
    """One omnidirectional path loss value at a TX-RX separation."""

    frequency_ghz: float
    distance_m: float
    path_loss_db: float
    polarization: Polarization
    environment: Environment
    layout: Layout
    tx_id: Optional[str] = None
    rx_id: Optional[str] = None


def validate_sample(sample: PathLossSample) -> list[str]:
    """Check one sample against the data-model invariants.

    Returns a list of violation messages; an empty list means the sample is
    usable for fitting. Violations are reported rather than raised so callers
    can choose between strict and lax ingestion.
    """
    violations = []
    if not math.isfinite(sample.frequency_ghz) or sample.frequency_ghz <= 0:
        violations.append("frequency must be finite and positive")
    if not math.isfinite(sample.distance_m):
        violations.append("distance must be finite")
    elif sample.distance_m < MIN_DISTANCE_M:
        violations.append("distance below the 1 m reference")
    if not math.isfinite(sample.path_loss_db):
        violations.append("path loss must be finite")
    elif sample.path_loss_db <= 0:
        violations.append("path loss must be positive")
    return violations


@dataclass(frozen=True)
class ScenarioKey:
    """One cell of the measurement taxonomy."""

    environment: Environment
    layout: Layout
    polarization_class: PolarizationClass

    def label(self) -> str:
        return ":".join(
            (self.environment.value, self.layout.value, self.polarization_class.value)
        )


# (environment, layout) pairs that carry measurements. LOS closed-plan is a
# valid key but has no data behind it.
MEASURED_PAIRS: tuple[tuple[Environment, Layout], ...] = (
    (Environment.LOS, Layout.CORRIDOR),
    (Environment.LOS, Layout.OPEN_PLAN),
    (Environment.NLOS, Layout.CORRIDOR),
    (Environment.NLOS, Layout.OPEN_PLAN),
    (Environment.NLOS, Layout.CLOSED_PLAN),
)


def measured_scenarios() -> tuple[ScenarioKey, ...]:
    """The 15 scenario keys with data: 5 (environment, layout) pairs x 3 classes.

    Order is deterministic: polarization class major (VV, VH, Combined), then
    the pair order of MEASURED_PAIRS.
    """
    return tuple(
        ScenarioKey(env, layout, pol)
        for pol in PolarizationClass
        for (env, layout) in MEASURED_PAIRS
    )


@dataclass(frozen=True)
class Dataset:
    """An immutable collection of samples plus a provenance note."""

    samples: tuple[PathLossSample, ...]
    provenance: str = ""

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[PathLossSample]:
        return iter(self.samples)

    def frequencies(self) -> tuple[float, ...]:
        """Distinct sample frequencies in GHz, ascending."""
        return tuple(sorted({s.frequency_ghz for s in self.samples}))

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Sample columns as float arrays (frequency, distance, path loss)."""
        f = np.array([s.frequency_ghz for s in self.samples], dtype=float)
        d = np.array([s.distance_m for s in self.samples], dtype=float)
        pl = np.array([s.path_loss_db for s in self.samples], dtype=float)
        return f, d, pl


def partition_by_scenario(dataset: Dataset, key: ScenarioKey) -> Dataset:
    """Select the samples of one scenario, preserving order.

    The Combined class takes both polarizations. An empty result is returned
    as an empty dataset, not an error.
    """
    picked = tuple(
        s
        for s in dataset.samples
        if s.environment is key.environment
        and s.layout is key.layout
        and key.polarization_class.matches(s.polarization)
    )
    prov = f"{dataset.provenance}[{key.label()}]" if dataset.provenance else key.label()
    return Dataset(picked, provenance=prov)


def ensure_fit_ready(dataset: Dataset, operation: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Validate a dataset for fitting and unpack it to arrays.

    Raises DataError if the dataset is empty or any sample violates the
    data-model invariants; the message cites the first offending sample.
    """
    if len(dataset) == 0:
        raise DataError(f"{operation}: empty dataset")
    f, d, pl = dataset.arrays()
    ok = (
        np.isfinite(f)
        & (f > 0)
        & np.isfinite(d)
        & (d >= MIN_DISTANCE_M)
        & np.isfinite(pl)
        & (pl > 0)
    )
    if not ok.all():
        bad = np.flatnonzero(~ok)
        first = int(bad[0])
        reasons = "; ".join(validate_sample(dataset.samples[first]))
        raise DataError(
            f"{operation}: {bad.size} invalid sample(s), first at index {first}: {reasons}"
        )
    return f, d, pl
