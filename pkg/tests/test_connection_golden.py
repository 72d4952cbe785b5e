"""Frozen canonical renderings of the connection matrix's last row.

The values were produced once by the direct double-binomial form, verified
against the independent (x+y, xy)-form, and frozen; this pins both the
entries and the canonical text format.
"""
from pathlib import Path

from pathdet.connection import connection_matrix, last_row_alt

GOLDEN = Path(__file__).parent / "golden" / "last_row_entries.txt"


def test_last_row_matches_golden_renderings():
    for line in GOLDEN.read_text().splitlines():
        n_str, j_str, rendered = line.split(" ", 2)
        n, j = int(n_str), int(j_str)
        assert connection_matrix(n).entry(n - 1, j).render() == rendered
        if j <= n - 2:
            assert last_row_alt(n, j).render() == rendered
