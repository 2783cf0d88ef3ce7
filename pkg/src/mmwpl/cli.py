"""Command-line front end: fit, predict, synth, report, compare.

Every command is deterministic: the same inputs (and, for synth, the same
seed) produce byte-identical outputs. Errors exit with a class-specific
code so scripts can tell misuse (2) from bad data (3) from numerically
ill-posed fits (4).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import dataio, fitting, presets
from .errors import DataError, DomainError, NumericalError, UsageError
from .models import MODEL_FAMILIES, predict
from .report import (
    TABLE_STYLES,
    FitReport,
    FitRow,
    delta_sigma,
    render_table,
    style_row_count,
)
from .numformat import format_fixed
from .synthesis import DEFAULT_SEED, SynthesisSpec, synthesize
from .taxonomy import (
    MEASURED_PAIRS,
    Dataset,
    Environment,
    Layout,
    PolarizationClass,
    ScenarioKey,
    partition_by_scenario,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERICAL = 4

_SINGLE_FREQ_FAMILIES = ("CI", "FI")
_MULTI_FREQ_FAMILIES = ("CI", "CIF", "ABG")
_FIT_CHOICES = ("auto", "ci", "fi", "abg", "cif")

_ENV_TOKENS = {"los": Environment.LOS, "nlos": Environment.NLOS}
_LAYOUT_TOKENS = {
    "co": Layout.CORRIDOR,
    "corridor": Layout.CORRIDOR,
    "op": Layout.OPEN_PLAN,
    "open-plan": Layout.OPEN_PLAN,
    "cp": Layout.CLOSED_PLAN,
    "closed-plan": Layout.CLOSED_PLAN,
}
_POL_TOKENS = {
    "vv": PolarizationClass.VV,
    "v-v": PolarizationClass.VV,
    "vh": PolarizationClass.VH,
    "v-h": PolarizationClass.VH,
    "comb": PolarizationClass.COMBINED,
    "combined": PolarizationClass.COMBINED,
}


def _parse_scenario(text: str, need_pol: bool = False):
    """Parse ENV:LAYOUT[:POL], e.g. NLOS:CP or los:corridor:vv."""
    parts = [p.strip().lower() for p in text.split(":")]
    if len(parts) not in (2, 3):
        raise UsageError(f"scenario {text!r} must be ENV:LAYOUT or ENV:LAYOUT:POL")
    if parts[0] not in _ENV_TOKENS:
        raise UsageError(f"unknown environment {parts[0]!r} in scenario {text!r}")
    if parts[1] not in _LAYOUT_TOKENS:
        raise UsageError(f"unknown layout {parts[1]!r} in scenario {text!r}")
    pol: Optional[PolarizationClass] = None
    if len(parts) == 3:
        if parts[2] not in _POL_TOKENS:
            raise UsageError(f"unknown polarization {parts[2]!r} in scenario {text!r}")
        pol = _POL_TOKENS[parts[2]]
    if need_pol and pol is None:
        raise UsageError(f"scenario {text!r} needs a polarization (ENV:LAYOUT:POL)")
    return _ENV_TOKENS[parts[0]], _LAYOUT_TOKENS[parts[1]], pol


def _parse_freq_blocks(text: str) -> tuple[tuple[float, int], ...]:
    """Parse --freqs blocks like "28:100,73:100" into (GHz, count) pairs."""
    blocks = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        freq_part, sep, count_part = chunk.partition(":")
        try:
            freq = float(freq_part)
            count = int(count_part) if sep else 1
        except ValueError:
            raise UsageError(
                f"bad --freqs entry {chunk!r}; expected GHZ:COUNT"
            ) from None
        blocks.append((freq, count))
    if not blocks:
        raise UsageError("--freqs selected no frequency blocks")
    return tuple(blocks)


def _freq_subset(dataset: Dataset, freq_ghz: float) -> Dataset:
    samples = tuple(s for s in dataset if s.frequency_ghz == freq_ghz)
    return Dataset(samples, provenance=f"{dataset.provenance}@{freq_ghz:g}GHz")


def _load_dataset(path: str, mode: str) -> Dataset:
    dataset, skipped = dataio.read_csv(path, mode=mode)
    for item in skipped:
        print(f"skipped row {item.row}: {item.reason}", file=sys.stderr)
    return dataset


def _write_text(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as stream:
            stream.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- fit

def _requested_families(spec: str) -> tuple[tuple[str, ...], tuple[str, ...], bool]:
    """Resolve --families into (single-frequency, multi-frequency, explicit) sets.

    'auto' adapts to the data: per-frequency CI+FI plus pooled CI+CIF+ABG
    when several frequencies are present. An explicit list is honored
    literally, so asking for a multi-frequency family on single-frequency
    data surfaces the estimator's refusal instead of silently skipping.
    """
    tokens = [t.strip().lower() for t in spec.split(",") if t.strip()]
    if not tokens or "auto" in tokens:
        return _SINGLE_FREQ_FAMILIES, _MULTI_FREQ_FAMILIES, False
    bad = [t for t in tokens if t not in _FIT_CHOICES]
    if bad:
        raise UsageError(f"unknown family token(s) {bad}; choose from {_FIT_CHOICES}")
    wanted = tuple(t.upper() for t in tokens)
    singles = tuple(f for f in _SINGLE_FREQ_FAMILIES if f in wanted)
    multis = tuple(f for f in _MULTI_FREQ_FAMILIES if f in wanted)
    return singles, multis, True


_FITTERS = {
    "CI": lambda ds, f0: fitting.fit_ci(ds),
    "FI": lambda ds, f0: fitting.fit_fi(ds),
    "ABG": lambda ds, f0: fitting.fit_abg(ds),
    "CIF": lambda ds, f0: fitting.fit_cif(ds, f0),
}


def _fit_partition(part, key, freq_tag, families, f0, rows, bases):
    """Fit one family set on one partition and collect XPD extensions.

    bases maps (env, layout, freq_tag, family) to the co-polarized fit so
    that V-H partitions can be extended once the V-V base exists.
    """
    n = len(part)
    for family in families:
        params = _FITTERS[family](part, f0)
        rows.append(
            FitRow(family, key, params, freq_ghz=freq_tag, n_samples=n,
                   source=part.provenance)
        )
        pol = key.polarization_class
        if pol is PolarizationClass.VV and family != "FI":
            bases[(key.environment, key.layout, freq_tag, family)] = params
        if pol is PolarizationClass.VH and family != "FI":
            base = bases.get((key.environment, key.layout, freq_tag, family))
            if base is not None:
                ext = fitting.fit_xpd(base, part)
                rows.append(
                    FitRow(family + "X", key, ext, freq_ghz=freq_tag, n_samples=n,
                           source=part.provenance)
                )


def _fit_report(dataset: Dataset, selections, singles, multis, f0,
                explicit: bool = False) -> FitReport:
    """Fit the requested families on each (env, layout, optional pol) selection."""
    rows: list[FitRow] = []
    bases: dict = {}
    pol_order = (PolarizationClass.VV, PolarizationClass.VH, PolarizationClass.COMBINED)
    for env, layout, pol_filter in selections:
        for pol in pol_order:
            if pol_filter is not None and pol is not pol_filter:
                continue
            key = ScenarioKey(env, layout, pol)
            part = partition_by_scenario(dataset, key)
            if len(part) == 0:
                continue
            if pol is PolarizationClass.COMBINED:
                kinds = {s.polarization for s in part}
                if len(kinds) < 2:
                    continue  # combined duplicates a lone polarization
            freqs = part.frequencies()
            for freq in freqs:
                sub = part if len(freqs) == 1 else _freq_subset(part, freq)
                _fit_partition(sub, key, freq, singles, f0, rows, bases)
            if len(freqs) > 1:
                _fit_partition(part, key, None, multis, f0, rows, bases)
            elif explicit:
                # families that genuinely need several frequencies were
                # asked for by name; let the estimator refuse the data
                pooled_only = tuple(f for f in multis if f not in _SINGLE_FREQ_FAMILIES)
                _fit_partition(part, key, None, pooled_only, f0, rows, bases)
    if not rows:
        raise DataError("fit: no scenario partition contained samples to fit")
    return FitReport(tuple(rows))


def _data_pairs(dataset: Dataset):
    present = []
    for s in dataset:
        pair = (s.environment, s.layout)
        if pair not in present:
            present.append(pair)
    ordered = [p for p in MEASURED_PAIRS if p in present]
    ordered.extend(p for p in present if p not in ordered)
    return ordered


def _render_styles(report: FitReport) -> str:
    chunks = [
        render_table(report, style)
        for style in TABLE_STYLES
        if style_row_count(report, style) > 0
    ]
    return "\n".join(chunks)


def _cmd_fit(args) -> int:
    dataset = _load_dataset(args.input, args.mode)
    if args.scenario:
        selections = [_parse_scenario(text) for text in args.scenario]
    else:
        selections = [(env, layout, None) for env, layout in _data_pairs(dataset)]
    singles, multis, explicit = _requested_families(args.families)
    report = _fit_report(dataset, selections, singles, multis, args.f0, explicit)
    if args.output:
        dataio.write_params_json(report, args.output)
        sys.stdout.write(_render_styles(report))
    else:
        sys.stdout.write(dataio.dumps_params(report))
    return EXIT_OK


# ------------------------------------------------------------- predict

def _resolve_model(args):
    family = args.model.upper()
    if family not in MODEL_FAMILIES:
        raise UsageError(f"unknown model family {args.model!r}; choose from {MODEL_FAMILIES}")
    if args.preset:
        return presets.preset_model(args.preset, family)
    report = dataio.read_params_json(args.params)
    scenario = None
    if args.scenario:
        env, layout, pol = _parse_scenario(args.scenario, need_pol=True)
        scenario = ScenarioKey(env, layout, pol)
    freq = "any"
    if args.fit_freq is not None:
        freq = None if args.fit_freq.lower() == "multi" else float(args.fit_freq)
    return report.single(family, scenario, freq).params


def _cmd_predict(args) -> int:
    model = _resolve_model(args)
    if model.family == "FI":
        freqs = args.freq if args.freq else [None]
    else:
        if not args.freq:
            raise UsageError(f"--freq is required for the {model.family} family")
        freqs = args.freq
    lines = ["freq_ghz,distance_m,path_loss_db"]
    for f in freqs:
        for d in args.dist:
            loss = predict(model, f, d)
            f_cell = "" if f is None else f"{f:g}"
            lines.append(f"{f_cell},{d:g},{loss:.4f}")
    _write_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# --------------------------------------------------------------- synth

def _cmd_synth(args) -> int:
    model = _resolve_model(args)
    env, layout, pol = _parse_scenario(args.scenario, need_pol=True)
    spec = SynthesisSpec(
        model=model,
        scenario=ScenarioKey(env, layout, pol),
        frequencies=_parse_freq_blocks(args.freqs),
        distance_range_m=(args.dmin, args.dmax),
        seed=args.seed,
    )
    dataset = synthesize(spec)
    dataio.write_csv(dataset, args.output if args.output else sys.stdout)
    return EXIT_OK


# -------------------------------------------------------------- report

def _cmd_report(args) -> int:
    if args.preset:
        report = presets.preset_report(args.preset)
        style = args.style or presets.preset_style(args.preset)
        text = render_table(report, style)
    else:
        report = dataio.read_params_json(args.params)
        if args.style:
            text = render_table(report, args.style)
        else:
            text = _render_styles(report)
            if not text:
                text = render_table(report, "table3")
    _write_text(text, args.output)
    return EXIT_OK


# ------------------------------------------------------------- compare

def _cmd_compare(args) -> int:
    dataset = _load_dataset(args.input, args.mode)
    label = "all samples"
    if args.scenario:
        env, layout, pol = _parse_scenario(args.scenario)
        key = ScenarioKey(env, layout, pol if pol else PolarizationClass.COMBINED)
        dataset = partition_by_scenario(dataset, key)
        label = key.label()
    if len(dataset) == 0:
        raise DataError("compare: no samples selected")
    freqs = dataset.frequencies()
    lines = [f"comparison on {label} ({len(dataset)} samples)"]
    if len(freqs) == 1:
        lines.append(f"single frequency: {freqs[0]:g} GHz")
        ci = fitting.fit_ci(dataset)
        fi = fitting.fit_fi(dataset)
        lines.append(f"CI : n={format_fixed(ci.ple_n, 2)}  sigma={format_fixed(ci.sigma_db, 2)} dB")
        lines.append(
            f"FI : alpha={format_fixed(fi.alpha_db, 2)} dB  beta={format_fixed(fi.beta_slope, 2)}"
            f"  sigma={format_fixed(fi.sigma_db, 2)} dB"
        )
        gap = ci.sigma_db - fi.sigma_db
        lines.append(f"sigma gap (CI - FI): {format_fixed(gap, 2)} dB")
    else:
        freq_text = ", ".join(f"{f:g}" for f in freqs)
        lines.append(f"multi-frequency: {freq_text} GHz")
        ci = fitting.fit_ci(dataset)
        cif = fitting.fit_cif(dataset, args.f0)
        abg = fitting.fit_abg(dataset)
        lines.append(f"CI  : n={format_fixed(ci.ple_n, 2)}  sigma={format_fixed(ci.sigma_db, 2)} dB")
        lines.append(
            f"CIF : n={format_fixed(cif.n, 2)}  b={format_fixed(cif.b, 2)}"
            f"  f0={format_fixed(cif.f0_ghz, 0)} GHz  sigma={format_fixed(cif.sigma_db, 2)} dB"
        )
        lines.append(
            f"ABG : alpha={format_fixed(abg.alpha_dist, 2)}  beta={format_fixed(abg.beta_db, 2)} dB"
            f"  gamma={format_fixed(abg.gamma_freq, 2)}  sigma={format_fixed(abg.sigma_db, 2)} dB"
        )
    _write_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# -------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmwpl",
        description="Fit, evaluate, and compare large-scale indoor mmWave path loss models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="fit model families to a CSV dataset")
    fit.add_argument("--input", required=True, help="sample CSV path")
    fit.add_argument("--scenario", action="append",
                     help="restrict to ENV:LAYOUT[:POL]; repeatable")
    fit.add_argument("--families", default="auto",
                     help="comma list of ci,fi,abg,cif or 'auto' (default); "
                          "V-H data also gets XPD extensions of the V-V base fits")
    fit.add_argument("--f0", type=float, default=None,
                     help="CIF reference frequency in GHz (default: count-weighted mean)")
    fit.add_argument("--mode", choices=("strict", "lax"), default="strict",
                     help="CSV ingestion mode (default strict)")
    fit.add_argument("--output", help="params JSON path; table goes to stdout")
    fit.set_defaults(func=_cmd_fit)

    predict_p = sub.add_parser("predict", help="evaluate a model on a (f, d) grid")
    src = predict_p.add_mutually_exclusive_group(required=True)
    src.add_argument("--params", help="params JSON from a fit run")
    src.add_argument("--preset", help="published preset selector, e.g. table3:28:VV:LOS:CO")
    predict_p.add_argument("--model", required=True, help="model family, e.g. CI")
    predict_p.add_argument("--scenario", help="ENV:LAYOUT:POL row filter for --params")
    predict_p.add_argument("--fit-freq",
                           help="row filter for --params: a GHz value or 'multi'")
    predict_p.add_argument("--freq", "--f", action="extend", nargs="+", type=float,
                           default=[], help="frequencies in GHz")
    predict_p.add_argument("--dist", "--d", action="extend", nargs="+", type=float,
                           required=True, help="distances in meters")
    predict_p.add_argument("--output", help="write columnar output here instead of stdout")
    predict_p.set_defaults(func=_cmd_predict)

    synth = sub.add_parser("synth", help="draw a shadow-faded dataset from a model")
    src = synth.add_mutually_exclusive_group(required=True)
    src.add_argument("--params", help="params JSON from a fit run")
    src.add_argument("--preset", help="published preset selector")
    synth.add_argument("--model", required=True, help="model family to draw from")
    synth.add_argument("--scenario", required=True,
                       help="ENV:LAYOUT:POL tag for the generated samples")
    synth.add_argument("--fit-freq", help="row filter for --params: GHz value or 'multi'")
    synth.add_argument("--freqs", required=True,
                       help="frequency blocks GHZ:COUNT[,GHZ:COUNT...], e.g. 28:100,73:100")
    synth.add_argument("--dmin", type=float, default=3.9,
                       help="minimum distance in m (default 3.9)")
    synth.add_argument("--dmax", type=float, default=45.9,
                       help="maximum distance in m (default 45.9)")
    synth.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help=f"generator seed (default {DEFAULT_SEED})")
    synth.add_argument("--output", help="CSV path (default stdout)")
    synth.set_defaults(func=_cmd_synth)

    report_p = sub.add_parser("report", help="render comparison tables")
    src = report_p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="published preset selector, e.g. table5:nlos-cp")
    src.add_argument("--params", help="params JSON from a fit run")
    report_p.add_argument("--style", choices=TABLE_STYLES,
                          help="table style (default: inferred)")
    report_p.add_argument("--output", help="write the table here instead of stdout")
    report_p.set_defaults(func=_cmd_report)

    compare = sub.add_parser("compare", help="fit and compare sigma on one dataset")
    compare.add_argument("--input", required=True, help="sample CSV path")
    compare.add_argument("--scenario", help="ENV:LAYOUT[:POL] partition to compare on")
    compare.add_argument("--f0", type=float, default=None,
                         help="CIF reference frequency in GHz")
    compare.add_argument("--mode", choices=("strict", "lax"), default="strict")
    compare.add_argument("--output", help="write the comparison here instead of stdout")
    compare.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, DomainError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
