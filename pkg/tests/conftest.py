from __future__ import annotations

import pytest


def _ordered(max_size: int) -> list[list[str]]:
    # every bsx of each size, sorted by (head size, head rank, tail rank)
    table = [["()"]]
    for n in range(1, max_size + 1):
        row = []
        for p in range(n):
            for h in table[p]:
                for t in table[n - 1 - p]:
                    row.append("(" + h + t[1:])
        table.append(row)
    return table


@pytest.fixture(scope="session")
def ordered_bsx() -> list[str]:
    """Reference numbering through size 9, built without the codec."""
    return [s for row in _ordered(9) for s in row]
