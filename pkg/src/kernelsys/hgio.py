"""Plain-text ".hg" hypergraph files.

Line 1 holds "n r"; every following non-blank, non-comment line holds r
space-separated 0-based vertex ids.  Lines starting with '#' are
comments.  Duplicate edges are rejected with the offending line number.
"""

from __future__ import annotations

import os

from .hypergraphs import Hypergraph, mask_of, vertices_of


class HgFormatError(ValueError):
    """Malformed .hg input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_hg(text: str) -> Hypergraph:
    n = r = None
    masks: list[int] = []
    first_line: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2:
                raise HgFormatError(lineno, f"header must be 'n r', got {line!r}")
            try:
                n, r = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise HgFormatError(lineno, f"header must be two integers, got {line!r}")
            if n < 0 or r < 0:
                raise HgFormatError(lineno, f"need n >= 0 and r >= 0, got n={n}, r={r}")
            continue
        if len(tokens) != r:
            raise HgFormatError(lineno, f"expected {r} vertex ids, got {len(tokens)}")
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise HgFormatError(lineno, f"vertex ids must be integers, got {line!r}")
        for v in ids:
            if not 0 <= v < n:
                raise HgFormatError(lineno, f"vertex {v} outside universe [0, {n})")
        m = mask_of(ids)
        if m.bit_count() != r:
            raise HgFormatError(lineno, f"repeated vertex in edge {line!r}")
        if m in first_line:
            raise HgFormatError(
                lineno, f"duplicate edge (first seen at line {first_line[m]})"
            )
        first_line[m] = lineno
        masks.append(m)
    if n is None:
        raise HgFormatError(1, "missing 'n r' header line")
    return Hypergraph(n, r, masks)


def format_hg(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r}"]
    for m in h.edge_masks:
        lines.append(" ".join(str(v) for v in vertices_of(m)))
    return "\n".join(lines) + "\n"


def read_hg(path: str | os.PathLike) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hg(fh.read())


def write_hg(h: Hypergraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hg(h))
