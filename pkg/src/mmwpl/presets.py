"""Published parameter sets for 28 GHz and 73 GHz indoor office channels.

Four preset catalogs, addressed as table3 through table6:

  table3  single-frequency CI and FI fits per polarization class
  table4  single-frequency cross-polarized CIX fits (V-V base plus XPD)
  table5  multi-frequency CI/CIF/ABG families and their XPD extensions,
          one block per environment and layout
  table6  multi-frequency CI/CIF/ABG fits on combined-polarization data

Values are transcribed verbatim from the published campaign results and
are immutable; the sigma gap between CI and FI is never stored, it is
recomputed from the sigma pair on demand.

Selectors narrow a catalog for the CLI: `table3:28:VV:LOS:CO` picks one
scenario, `table5:nlos-cp` one environment/layout block. Tokens may name
a frequency in GHz ("28", "73"), "multi" for multi-frequency rows, a
polarization class (VV, VH, Comb), an environment (LOS, NLOS), a layout
(CO, OP, CP), or a fused environment-layout pair ("nlos-cp").
"""

from __future__ import annotations

from typing import Optional

from .errors import UsageError
from .models import AbgParams, CifParams, CiParams, FiParams, XpdExtension
from .report import FitReport, FitRow
from .taxonomy import Environment, Layout, PolarizationClass, ScenarioKey

PRESETS_VERSION = "1"

_E = Environment
_L = Layout
_P = PolarizationClass

# single-frequency CI and FI fits:
# (freq_ghz, pol, env, layout, ple, sigma_ci, alpha, beta, sigma_fi)
_SINGLE_FREQ_CI_FI = (
    (28.0, _P.VV, _E.LOS, _L.CORRIDOR, 1.1, 0.7, 63.6, 0.9, 0.6),
    (28.0, _P.VV, _E.LOS, _L.OPEN_PLAN, 1.2, 2.3, 52.3, 2.3, 1.4),
    (28.0, _P.VV, _E.NLOS, _L.CORRIDOR, 2.5, 8.3, 40.7, 4.0, 7.5),
    (28.0, _P.VV, _E.NLOS, _L.OPEN_PLAN, 2.5, 8.0, 38.5, 4.6, 5.7),
    (28.0, _P.VV, _E.NLOS, _L.CLOSED_PLAN, 2.8, 10.1, 55.0, 3.3, 10.0),
    (28.0, _P.VH, _E.LOS, _L.CORRIDOR, 2.4, 2.8, 76.1, 1.1, 0.2),
    (28.0, _P.VH, _E.LOS, _L.OPEN_PLAN, 2.8, 1.6, 66.7, 2.2, 1.1),
    (28.0, _P.VH, _E.NLOS, _L.CORRIDOR, 3.2, 3.3, 58.4, 3.4, 3.3),
    (28.0, _P.VH, _E.NLOS, _L.OPEN_PLAN, 3.4, 4.0, 58.7, 3.7, 3.9),
    (28.0, _P.VH, _E.NLOS, _L.CLOSED_PLAN, 3.7, 10.7, 61.3, 3.8, 10.7),
    (28.0, _P.COMBINED, _E.LOS, _L.CORRIDOR, 1.7, 7.4, 69.8, 1.0, 7.3),
    (28.0, _P.COMBINED, _E.LOS, _L.OPEN_PLAN, 2.0, 6.9, 59.5, 2.2, 6.9),
    (28.0, _P.COMBINED, _E.NLOS, _L.CORRIDOR, 2.8, 8.0, 51.5, 3.5, 7.8),
    (28.0, _P.COMBINED, _E.NLOS, _L.OPEN_PLAN, 2.9, 7.9, 50.2, 3.9, 7.5),
    (28.0, _P.COMBINED, _E.NLOS, _L.CLOSED_PLAN, 3.2, 11.8, 59.2, 3.4, 11.8),
    (73.0, _P.VV, _E.LOS, _L.CORRIDOR, 1.2, 2.3, 81.4, 0.2, 0.8),
    (73.0, _P.VV, _E.LOS, _L.OPEN_PLAN, 1.5, 1.3, 72.5, 1.2, 1.2),
    (73.0, _P.VV, _E.NLOS, _L.CORRIDOR, 3.1, 13.4, 51.2, 4.4, 13.1),
    (73.0, _P.VV, _E.NLOS, _L.OPEN_PLAN, 3.1, 6.8, 66.9, 3.4, 6.8),
    (73.0, _P.VV, _E.NLOS, _L.CLOSED_PLAN, 3.3, 11.7, 82.6, 2.2, 11.4),
    (73.0, _P.VH, _E.LOS, _L.CORRIDOR, 3.3, 5.9, 100.5, 0.6, 1.2),
    (73.0, _P.VH, _E.LOS, _L.OPEN_PLAN, 4.0, 4.5, 88.5, 1.8, 2.5),
    (73.0, _P.VH, _E.NLOS, _L.CORRIDOR, 4.0, 7.5, 92.7, 2.3, 6.3),
    (73.0, _P.VH, _E.NLOS, _L.OPEN_PLAN, 4.4, 6.8, 99.8, 1.3, 4.7),
    (73.0, _P.VH, _E.NLOS, _L.CLOSED_PLAN, 4.7, 10.0, 99.4, 2.1, 7.5),
    (73.0, _P.COMBINED, _E.LOS, _L.CORRIDOR, 2.2, 12.4, 91.0, 0.4, 11.7),
    (73.0, _P.COMBINED, _E.LOS, _L.OPEN_PLAN, 2.8, 11.1, 80.5, 1.5, 10.9),
    (73.0, _P.COMBINED, _E.NLOS, _L.CORRIDOR, 3.5, 12.8, 74.0, 3.2, 12.8),
    (73.0, _P.COMBINED, _E.NLOS, _L.OPEN_PLAN, 3.6, 9.3, 84.6, 2.2, 8.8),
    (73.0, _P.COMBINED, _E.NLOS, _L.CLOSED_PLAN, 4.0, 13.5, 92.9, 2.0, 12.4),
)

# single-frequency cross-polarized extensions over the V-V CI base:
# (freq_ghz, env, layout, xpd_db, sigma)
_SINGLE_FREQ_CIX = (
    (28.0, _E.LOS, _L.CORRIDOR, 14.6, 0.2),
    (28.0, _E.LOS, _L.OPEN_PLAN, 13.3, 2.0),
    (28.0, _E.NLOS, _L.CORRIDOR, 8.8, 3.9),
    (28.0, _E.NLOS, _L.OPEN_PLAN, 8.7, 4.7),
    (28.0, _E.NLOS, _L.CLOSED_PLAN, 11.0, 11.0),
    (73.0, _E.LOS, _L.CORRIDOR, 23.8, 1.8),
    (73.0, _E.LOS, _L.OPEN_PLAN, 21.4, 2.6),
    (73.0, _E.NLOS, _L.CORRIDOR, 12.9, 6.5),
    (73.0, _E.NLOS, _L.OPEN_PLAN, 12.9, 5.5),
    (73.0, _E.NLOS, _L.CLOSED_PLAN, 16.5, 8.1),
)

# multi-frequency families per (env, layout):
# CI (ple, sigma), CIX (xpd, sigma), CIF (n, b, f0, sigma), CIFX (xpd, sigma),
# ABG (alpha, beta, gamma, sigma), ABGX (xpd, sigma)
_MULTI_FREQ = {
    (_E.LOS, _L.CORRIDOR): {
        "CI": (1.1, 1.9),
        "CIX": (19.2, 5.5),
        "CIF": (1.1, 0.13, 51.0, 1.7),
        "CIFX": (19.2, 4.8),
        "ABG": (0.5, 32.2, 2.4, 1.0),
        "ABGX": (18.9, 4.6),
    },
    (_E.LOS, _L.OPEN_PLAN): {
        "CI": (1.4, 2.2),
        "CIX": (17.3, 5.8),
        "CIF": (1.4, 0.24, 51.0, 1.9),
        "CIFX": (17.3, 4.7),
        "ABG": (1.7, 17.8, 2.7, 1.6),
        "ABGX": (17.5, 4.4),
    },
    (_E.NLOS, _L.CORRIDOR): {
        "CI": (2.8, 11.8),
        "CIX": (10.8, 7.7),
        "CIF": (2.8, 0.22, 51.0, 11.2),
        "CIFX": (10.8, 5.8),
        "ABG": (4.2, -17.2, 3.8, 10.7),
        "ABGX": (12.1, 6.4),
    },
    (_E.NLOS, _L.OPEN_PLAN): {
        "CI": (2.8, 8.0),
        "CIX": (10.7, 6.7),
        "CIF": (2.8, 0.21, 49.0, 7.5),
        "CIFX": (10.6, 5.5),
        "ABG": (4.1, -12.2, 3.8, 6.4),
        "ABGX": (12.3, 5.5),
    },
    (_E.NLOS, _L.CLOSED_PLAN): {
        "CI": (3.0, 11.4),
        "CIX": (13.4, 11.2),
        "CIF": (3.0, 0.20, 50.0, 10.9),
        "CIFX": (13.5, 10.1),
        "ABG": (2.8, 6.2, 3.8, 10.8),
        "ABGX": (13.3, 9.8),
    },
}

# multi-frequency combined-polarization fits per (env, layout):
# CI (ple, sigma), CIF (n, b, f0, sigma), ABG (alpha, beta, gamma, sigma)
_MULTI_FREQ_COMBINED = {
    (_E.LOS, _L.CORRIDOR): {
        "CI": (2.0, 10.6),
        "CIF": (2.0, 0.30, 51.0, 10.2),
        "ABG": (0.7, 22.7, 3.5, 9.8),
    },
    (_E.LOS, _L.OPEN_PLAN): {
        "CI": (2.4, 9.8),
        "CIF": (2.4, 0.36, 51.0, 9.2),
        "ABG": (1.9, 10.1, 3.6, 9.1),
    },
    (_E.NLOS, _L.CORRIDOR): {
        "CI": (3.1, 11.6),
        "CIF": (3.1, 0.23, 51.0, 10.7),
        "ABG": (3.3, -7.1, 4.2, 10.6),
    },
    (_E.NLOS, _L.OPEN_PLAN): {
        "CI": (3.2, 9.3),
        "CIF": (3.2, 0.23, 49.0, 8.6),
        "ABG": (3.3, -1.0, 4.0, 8.4),
    },
    (_E.NLOS, _L.CLOSED_PLAN): {
        "CI": (3.6, 13.3),
        "CIF": (3.6, 0.22, 49.0, 12.6),
        "ABG": (2.8, 6.6, 4.2, 12.2),
    },
}


def _table3_report() -> FitReport:
    rows = []
    for freq, pol, env, layout, ple, s_ci, alpha, beta, s_fi in _SINGLE_FREQ_CI_FI:
        key = ScenarioKey(env, layout, pol)
        src = f"table3:{freq:g}:{key.label()}"
        rows.append(
            FitRow("CI", key, CiParams(ple, s_ci), freq_ghz=freq, source=src)
        )
        rows.append(
            FitRow("FI", key, FiParams(alpha, beta, s_fi), freq_ghz=freq, source=src)
        )
    return FitReport(tuple(rows))


def _vv_ci_base(freq: float, env: Environment, layout: Layout) -> CiParams:
    for f, pol, e, lo, ple, s_ci, *_ in _SINGLE_FREQ_CI_FI:
        if f == freq and pol is _P.VV and e is env and lo is layout:
            return CiParams(ple, s_ci)
    raise KeyError((freq, env, layout))


def _table4_report() -> FitReport:
    rows = []
    for freq, env, layout, xpd, sigma in _SINGLE_FREQ_CIX:
        key = ScenarioKey(env, layout, _P.VH)
        ext = XpdExtension(_vv_ci_base(freq, env, layout), xpd, sigma)
        rows.append(
            FitRow("CIX", key, ext, freq_ghz=freq, source=f"table4:{freq:g}:{key.label()}")
        )
    return FitReport(tuple(rows))


def _table5_report() -> FitReport:
    rows = []
    for (env, layout), fams in _MULTI_FREQ.items():
        vv = ScenarioKey(env, layout, _P.VV)
        vh = ScenarioKey(env, layout, _P.VH)
        ci = CiParams(*fams["CI"])
        cif = CifParams(*fams["CIF"])
        abg = AbgParams(*fams["ABG"])
        pairs = (
            ("CI", vv, ci),
            ("CIX", vh, XpdExtension(ci, *fams["CIX"])),
            ("CIF", vv, cif),
            ("CIFX", vh, XpdExtension(cif, *fams["CIFX"])),
            ("ABG", vv, abg),
            ("ABGX", vh, XpdExtension(abg, *fams["ABGX"])),
        )
        for family, key, params in pairs:
            rows.append(
                FitRow(family, key, params, source=f"table5:{key.label()}")
            )
    return FitReport(tuple(rows))


def _table6_report() -> FitReport:
    rows = []
    for (env, layout), fams in _MULTI_FREQ_COMBINED.items():
        key = ScenarioKey(env, layout, _P.COMBINED)
        for family, params in (
            ("CI", CiParams(*fams["CI"])),
            ("CIF", CifParams(*fams["CIF"])),
            ("ABG", AbgParams(*fams["ABG"])),
        ):
            rows.append(
                FitRow(family, key, params, source=f"table6:{key.label()}")
            )
    return FitReport(tuple(rows))


_CATALOG_BUILDERS = {
    "table3": _table3_report,
    "table4": _table4_report,
    "table5": _table5_report,
    "table6": _table6_report,
}

PRESET_TABLES = tuple(_CATALOG_BUILDERS)

_POL_TOKENS = {
    "vv": _P.VV, "v-v": _P.VV,
    "vh": _P.VH, "v-h": _P.VH,
    "comb": _P.COMBINED, "comb.": _P.COMBINED, "combined": _P.COMBINED,
}

_ENV_TOKENS = {"los": _E.LOS, "nlos": _E.NLOS}

_LAYOUT_TOKENS = {
    "co": _L.CORRIDOR, "corridor": _L.CORRIDOR,
    "op": _L.OPEN_PLAN, "open-plan": _L.OPEN_PLAN,
    "cp": _L.CLOSED_PLAN, "closed-plan": _L.CLOSED_PLAN,
}


class _Selector:
    def __init__(self, table: str):
        self.table = table
        self.freq: Optional[float] = None
        self.multi = False
        self.pol: Optional[PolarizationClass] = None
        self.env: Optional[Environment] = None
        self.layout: Optional[Layout] = None


def _parse_selector(selector: str) -> _Selector:
    parts = [p.strip() for p in selector.split(":")]
    table = parts[0].lower()
    if table not in _CATALOG_BUILDERS:
        raise UsageError(
            f"unknown preset table {parts[0]!r}; expected one of {PRESET_TABLES}"
        )
    sel = _Selector(table)
    for token in parts[1:]:
        low = token.lower()
        if not low:
            continue
        if low == "multi":
            sel.multi = True
            continue
        if low in _POL_TOKENS:
            sel.pol = _POL_TOKENS[low]
            continue
        if low in _ENV_TOKENS:
            sel.env = _ENV_TOKENS[low]
            continue
        if low in _LAYOUT_TOKENS:
            sel.layout = _LAYOUT_TOKENS[low]
            continue
        try:
            sel.freq = float(low)
            continue
        except ValueError:
            pass
        # fused environment-layout form, e.g. "nlos-cp"
        head, sep, tail = low.partition("-")
        if sep and head in _ENV_TOKENS and tail in _LAYOUT_TOKENS:
            sel.env = _ENV_TOKENS[head]
            sel.layout = _LAYOUT_TOKENS[tail]
            continue
        raise UsageError(
            f"unknown preset selector token {token!r} in {selector!r}; tokens may be "
            "a frequency in GHz, 'multi', VV/VH/Comb, LOS/NLOS, CO/OP/CP, or env-layout"
        )
    return sel


def preset_report(selector: str) -> FitReport:
    """The preset rows addressed by a selector, as a renderable report.

    The bare table id returns the full catalog; additional tokens narrow
    it. An empty match raises UsageError (presets are a fixed catalog, so
    an empty result always means a mistyped selector).
    """
    sel = _parse_selector(selector)
    report = _CATALOG_BUILDERS[sel.table]()
    rows = []
    for row in report.rows:
        if sel.multi and row.freq_ghz is not None:
            continue
        if sel.freq is not None and row.freq_ghz != sel.freq:
            continue
        if sel.pol is not None and row.scenario.polarization_class is not sel.pol:
            continue
        if sel.env is not None and row.scenario.environment is not sel.env:
            continue
        if sel.layout is not None and row.scenario.layout is not sel.layout:
            continue
        rows.append(row)
    if not rows:
        raise UsageError(f"preset selector {selector!r} matches no rows")
    return FitReport(tuple(rows))


def preset_style(selector: str) -> str:
    """The table style a selector naturally renders as."""
    return _parse_selector(selector).table


def preset_model(selector: str, family: str):
    """The unique preset parameter set for one model family.

    Raises UsageError when the selector leaves the family absent or
    ambiguous (for example `table3:28:VV` without an environment).
    """
    report = preset_report(selector)
    row = report.single(family.upper())
    return row.params
