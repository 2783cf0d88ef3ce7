"""Second, independently maintained copy of the published parameter values.

These rows mirror the printed comparison tables cell by cell, kept as
strings exactly as printed (including bare "0" entries and the two cells
that carry a "dB" suffix). The golden tests parse both these strings and
the package's rendered tables numerically, so formatting differences that
do not change the printed value (0 vs 0.0) do not mask real mismatches.

Kept separate from mmwpl.presets on purpose: the package catalog and this
file were transcribed as two different shapes from the same source, so a
typo in one shows up as a golden-test failure instead of passing silently.
"""

# freq, pol, env, layout, PLE, sigma_CI, alpha, beta, sigma_FI, dsigma
TABLE3_ROWS = (
    ("28", "V-V", "LOS", "co", "1.1", "0.7", "63.6", "0.9", "0.6", "0.1"),
    ("28", "V-V", "LOS", "op", "1.2", "2.3", "52.3", "2.3", "1.4", "0.9"),
    ("28", "V-V", "NLOS", "co", "2.5", "8.3", "40.7", "4.0", "7.5", "0.8"),
    ("28", "V-V", "NLOS", "op", "2.5", "8.0", "38.5", "4.6", "5.7", "2.3"),
    ("28", "V-V", "NLOS", "cp", "2.8", "10.1", "55.0", "3.3", "10.0", "0.1"),
    ("28", "V-H", "LOS", "co", "2.4", "2.8", "76.1", "1.1", "0.2", "2.6"),
    ("28", "V-H", "LOS", "op", "2.8", "1.6", "66.7", "2.2", "1.1", "0.5"),
    ("28", "V-H", "NLOS", "co", "3.2", "3.3", "58.4", "3.4", "3.3", "0"),
    ("28", "V-H", "NLOS", "op", "3.4", "4.0", "58.7", "3.7", "3.9", "0.1"),
    ("28", "V-H", "NLOS", "cp", "3.7", "10.7", "61.3", "3.8", "10.7", "0"),
    ("28", "Comb.", "LOS", "co", "1.7", "7.4", "69.8", "1.0", "7.3", "0.1"),
    ("28", "Comb.", "LOS", "op", "2.0", "6.9", "59.5", "2.2", "6.9", "0"),
    ("28", "Comb.", "NLOS", "co", "2.8", "8.0", "51.5", "3.5", "7.8", "0.2"),
    ("28", "Comb.", "NLOS", "op", "2.9", "7.9", "50.2", "3.9", "7.5", "0.4"),
    ("28", "Comb.", "NLOS", "cp", "3.2", "11.8", "59.2", "3.4", "11.8", "0"),
    ("73", "V-V", "LOS", "co", "1.2", "2.3", "81.4", "0.2", "0.8", "1.5"),
    ("73", "V-V", "LOS", "op", "1.5", "1.3", "72.5", "1.2", "1.2", "0.1"),
    ("73", "V-V", "NLOS", "co", "3.1", "13.4", "51.2", "4.4", "13.1", "0.3"),
    ("73", "V-V", "NLOS", "op", "3.1", "6.8", "66.9", "3.4", "6.8", "0"),
    ("73", "V-V", "NLOS", "cp", "3.3", "11.7", "82.6", "2.2", "11.4", "0.3"),
    ("73", "V-H", "LOS", "co", "3.3", "5.9", "100.5", "0.6", "1.2", "4.7"),
    ("73", "V-H", "LOS", "op", "4.0", "4.5", "88.5", "1.8", "2.5", "2.0"),
    ("73", "V-H", "NLOS", "co", "4.0", "7.5", "92.7", "2.3", "6.3", "1.2"),
    ("73", "V-H", "NLOS", "op", "4.4", "6.8", "99.8", "1.3", "4.7", "2.1"),
    ("73", "V-H", "NLOS", "cp", "4.7", "10.0", "99.4", "2.1", "7.5", "2.5"),
    ("73", "Comb.", "LOS", "co", "2.2", "12.4", "91.0", "0.4", "11.7", "0.7"),
    ("73", "Comb.", "LOS", "op", "2.8", "11.1", "80.5", "1.5", "10.9", "0.2"),
    ("73", "Comb.", "NLOS", "co", "3.5", "12.8", "74.0", "3.2", "12.8", "0"),
    ("73", "Comb.", "NLOS", "op", "3.6", "9.3", "84.6", "2.2", "8.8", "0.5"),
    ("73", "Comb.", "NLOS", "cp", "4.0", "13.5", "92.9", "2.0", "12.4", "1.1"),
)

# freq, pol, env, layout, n_VV, XPD, sigma
TABLE4_ROWS = (
    ("28", "V-H", "LOS", "co", "1.1", "14.6", "0.2"),
    ("28", "V-H", "LOS", "op", "1.2", "13.3", "2.0"),
    ("28", "V-H", "NLOS", "co", "2.5", "8.8", "3.9"),
    ("28", "V-H", "NLOS", "op", "2.5", "8.7", "4.7"),
    ("28", "V-H", "NLOS", "cp", "2.8", "11.0", "11.0"),
    ("73", "V-H", "LOS", "co", "1.2", "23.8", "1.8"),
    ("73", "V-H", "LOS", "op", "1.5", "21.4", "2.6"),
    ("73", "V-H", "NLOS", "co", "3.1", "12.9", "6.5"),
    ("73", "V-H", "NLOS", "op", "3.1", "12.9", "5.5"),
    ("73", "V-H", "NLOS", "cp", "3.3", "16.5", "8.1"),
)

# env, layout, model, pol, p1, p2, p3, XPD, sigma  (p columns: PLE / n,b,f0 / alpha,beta,gamma)
TABLE5_ROWS = (
    ("LOS", "co", "CI", "V-V", "1.1", "-", "-", "-", "1.9"),
    ("LOS", "co", "CIX", "V-H", "1.1", "-", "-", "19.2", "5.5"),
    ("LOS", "co", "CIF", "V-V", "1.1", "0.13", "51", "-", "1.7"),
    ("LOS", "co", "CIFX", "V-H", "1.1", "0.13", "51", "19.2", "4.8"),
    ("LOS", "co", "ABG", "V-V", "0.5", "32.2", "2.4", "-", "1.0"),
    ("LOS", "co", "ABGX", "V-H", "0.5", "32.2", "2.4", "18.9", "4.6"),
    ("LOS", "op", "CI", "V-V", "1.4", "-", "-", "-", "2.2"),
    ("LOS", "op", "CIX", "V-H", "1.4", "-", "-", "17.3", "5.8"),
    ("LOS", "op", "CIF", "V-V", "1.4", "0.24", "51", "-", "1.9"),
    ("LOS", "op", "CIFX", "V-H", "1.4", "0.24", "51", "17.3", "4.7"),
    ("LOS", "op", "ABG", "V-V", "1.7", "17.8", "2.7", "-", "1.6"),
    ("LOS", "op", "ABGX", "V-H", "1.7", "17.8", "2.7", "17.5", "4.4"),
    ("NLOS", "co", "CI", "V-V", "2.8", "-", "-", "-", "11.8"),
    ("NLOS", "co", "CIX", "V-H", "2.8", "-", "-", "10.8", "7.7"),
    ("NLOS", "co", "CIF", "V-V", "2.8", "0.22", "51", "-", "11.2"),
    ("NLOS", "co", "CIFX", "V-H", "2.8", "0.22", "51", "10.8", "5.8"),
    ("NLOS", "co", "ABG", "V-V", "4.2", "-17.2", "3.8", "-", "10.7"),
    ("NLOS", "co", "ABGX", "V-H", "4.2", "-17.2", "3.8", "12.1", "6.4"),
    ("NLOS", "op", "CI", "V-V", "2.8", "-", "-", "-", "8.0"),
    ("NLOS", "op", "CIX", "V-H", "2.8", "-", "-", "10.7", "6.7"),
    ("NLOS", "op", "CIF", "V-V", "2.8", "0.21", "49", "-", "7.5"),
    ("NLOS", "op", "CIFX", "V-H", "2.8", "0.21", "49", "10.6", "5.5"),
    ("NLOS", "op", "ABG", "V-V", "4.1", "-12.2", "3.8", "-", "6.4"),
    ("NLOS", "op", "ABGX", "V-H", "4.1", "-12.2", "3.8", "12.3 dB", "5.5 dB"),
    ("NLOS", "cp", "CI", "V-V", "3.0", "-", "-", "-", "11.4"),
    ("NLOS", "cp", "CIX", "V-H", "3.0", "-", "-", "13.4", "11.2"),
    ("NLOS", "cp", "CIF", "V-V", "3.0", "0.20", "50", "-", "10.9"),
    ("NLOS", "cp", "CIFX", "V-H", "3.0", "0.20", "50", "13.5", "10.1"),
    ("NLOS", "cp", "ABG", "V-V", "2.8", "6.2", "3.8", "-", "10.8"),
    ("NLOS", "cp", "ABGX", "V-H", "2.8", "6.2", "3.8", "13.3", "9.8"),
)

# model, env, layout, p1, p2, p3, sigma
TABLE6_ROWS = (
    ("CI", "LOS", "co", "2.0", "-", "-", "10.6"),
    ("CI", "LOS", "op", "2.4", "-", "-", "9.8"),
    ("CI", "NLOS", "co", "3.1", "-", "-", "11.6"),
    ("CI", "NLOS", "op", "3.2", "-", "-", "9.3"),
    ("CI", "NLOS", "cp", "3.6", "-", "-", "13.3"),
    ("CIF", "LOS", "co", "2.0", "0.30", "51", "10.2"),
    ("CIF", "LOS", "op", "2.4", "0.36", "51", "9.2"),
    ("CIF", "NLOS", "co", "3.1", "0.23", "51", "10.7"),
    ("CIF", "NLOS", "op", "3.2", "0.23", "49", "8.6"),
    ("CIF", "NLOS", "cp", "3.6", "0.22", "49", "12.6"),
    ("ABG", "LOS", "co", "0.7", "22.7", "3.5", "9.8"),
    ("ABG", "LOS", "op", "1.9", "10.1", "3.6", "9.1"),
    ("ABG", "NLOS", "co", "3.3", "-7.1", "4.2", "10.6"),
    ("ABG", "NLOS", "op", "3.3", "-1.0", "4.0", "8.4"),
    ("ABG", "NLOS", "cp", "2.8", "6.6", "4.2", "12.2"),
)


def cell_value(text: str):
    """Numeric value of one table cell, None for an empty "-" cell.

    Unit suffixes and frequency labels are stripped before parsing so
    "12.3 dB" and "28 GHz" compare by value.
    """
    text = text.strip()
    for suffix in (" dB", " GHz"):
        if text.endswith(suffix):
            text = text[: -len(suffix)].strip()
    if text in ("-", ""):
        return None
    try:
        return float(text)
    except ValueError:
        return text


def parse_rendered(table_text: str) -> list[list[str]]:
    """Body rows of a rendered table as stripped cell lists."""
    lines = table_text.strip().splitlines()
    return [[cell.strip() for cell in line.split("|")] for line in lines[2:]]
