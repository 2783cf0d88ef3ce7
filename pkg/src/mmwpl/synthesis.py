"""Seeded generation of shadow-faded datasets from any fitted model.

Distances are drawn uniformly in log10(d) so every decade of the fitted
range carries equal leverage; shadow fading is added per sample as an
i.i.d. zero-mean Gaussian in dB with the model's sigma. The generator is
numpy's default PCG64 bit stream (numpy.random.default_rng), so one seed
gives one bit-identical dataset on every platform numpy supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataError, DomainError
from .models import PathLossModel, predict
from .taxonomy import (
    MIN_DISTANCE_M,
    Dataset,
    PathLossSample,
    Polarization,
    PolarizationClass,
    ScenarioKey,
)

DEFAULT_SEED = 0


@dataclass(frozen=True)
class SynthesisSpec:
    """Everything a synthesis run needs, frozen so runs are reproducible.

    frequencies is a sequence of (frequency_ghz, sample_count) pairs; one
    block of samples is drawn per pair, in order.
    """

    model: PathLossModel
    scenario: ScenarioKey
    frequencies: tuple[tuple[float, int], ...]
    distance_range_m: tuple[float, float]
    seed: int = DEFAULT_SEED


def synthesize(spec: SynthesisSpec) -> Dataset:
    """Draw a dataset from a model under a frozen synthesis description.

    Identical specs give identical datasets. The scenario must name a
    concrete polarization (VV or VH): samples always carry a single
    polarization, so the Combined class cannot be synthesized directly.
    """
    if spec.scenario.polarization_class is PolarizationClass.COMBINED:
        raise DataError(
            "synthesize: Combined is a dataset-level selection; "
            "tag samples VV or VH and combine afterwards"
        )
    polarization = Polarization(spec.scenario.polarization_class.value)
    d_lo, d_hi = (float(v) for v in spec.distance_range_m)
    if not (math.isfinite(d_lo) and math.isfinite(d_hi)):
        raise DomainError("synthesize: distance range must be finite")
    if d_lo < MIN_DISTANCE_M:
        raise DomainError("synthesize: minimum distance below the 1 m reference")
    if d_hi < d_lo:
        raise DomainError("synthesize: empty distance range")
    if len(spec.frequencies) == 0:
        raise DataError("synthesize: no frequency blocks requested")
    for f_ghz, count in spec.frequencies:
        if not math.isfinite(f_ghz) or f_ghz <= 0.0:
            raise DomainError(f"synthesize: bad frequency {f_ghz!r}")
        if int(count) != count or count <= 0:
            raise DataError(f"synthesize: bad sample count {count!r}")

    rng = np.random.default_rng(spec.seed)
    sigma = spec.model.sigma_db
    samples: list[PathLossSample] = []
    for f_ghz, count in spec.frequencies:
        count = int(count)
        distances = 10.0 ** rng.uniform(math.log10(d_lo), math.log10(d_hi), count)
        mean = predict(spec.model, float(f_ghz), distances)
        fading = rng.normal(0.0, sigma, count) if sigma > 0.0 else np.zeros(count)
        losses = np.asarray(mean, dtype=float) + fading
        for d_m, pl in zip(distances, losses):
            samples.append(
                PathLossSample(
                    frequency_ghz=float(f_ghz),
                    distance_m=float(d_m),
                    path_loss_db=float(pl),
                    polarization=polarization,
                    environment=spec.scenario.environment,
                    layout=spec.scenario.layout,
                )
            )
    return Dataset(tuple(samples), provenance=f"synth(seed={spec.seed})")
