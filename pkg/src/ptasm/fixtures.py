"""Reference matrices used as fixtures, and their emission as text files."""

from __future__ import annotations

from pathlib import Path

from .matrix import IntMatrix, format_matrix

EXAMPLE_ORDER6 = IntMatrix([
    [0, 0, 1, 0, 0],
    [1, 0, -1, 1, 0],
    [0, 0, 1, -1, 1],
    [0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0],
])

CYCLE10_ORDER40 = IntMatrix([
    [-1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
])

CYCLE10_ORDER60 = IntMatrix([
    [0, -1, 0, 0, 0, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
])

ORDER16_PT = IntMatrix([
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, -1, 1],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
])

ORDER16_ASM = IntMatrix([
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, -1, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
])

TWO_T_BLOCKS_ORDER12 = IntMatrix([
    [0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, -1, 0, 1, 0, 0],
    [0, 1, -1, 0, 0, 1],
    [0, 0, 1, -1, 1, 0],
    [0, 0, 0, 1, 0, 0],
])

FIXTURES: dict[str, IntMatrix] = {
    "example_order6.txt": EXAMPLE_ORDER6,
    "cycle10_order40.txt": CYCLE10_ORDER40,
    "cycle10_order60.txt": CYCLE10_ORDER60,
    "order16_pt.txt": ORDER16_PT,
    "order16_asm.txt": ORDER16_ASM,
    "two_t_blocks_order12.txt": TWO_T_BLOCKS_ORDER12,
}


def write_fixtures(out_dir: str | Path) -> list[Path]:
    """Write every fixture in the plain matrix text format; returns the paths in name order."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in sorted(FIXTURES):
        path = out / name
        path.write_text(format_matrix(FIXTURES[name]), encoding="utf-8")
        paths.append(path)
    return paths
