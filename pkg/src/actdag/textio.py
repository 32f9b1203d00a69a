"""Plain-text serialization of graphs and target families.

Graph files: a ``p=<n>`` header, then one edge per line, ``a -> b`` for
arrows and ``a -- b`` for lines.  Family files: one target per line as
comma-separated vertices, with ``()`` for the empty target.  ``#`` starts a
comment in both formats; blank lines are ignored; vertices are 1-based.
"""

from __future__ import annotations

import re
from typing import IO, Iterable, Union

from .errors import FormatError
from .equivalence import TargetFamily
from .pdag import PartiallyDirectedGraph

_EDGE_RE = re.compile(r"^(\d+)\s*(->|--)\s*(\d+)$")

PathOrFile = Union[str, IO[str]]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> PartiallyDirectedGraph:
    p = None
    arrows: list[tuple[int, int]] = []
    lines: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if p is None:
            m = re.match(r"^p\s*=\s*(\d+)$", line)
            if not m:
                raise FormatError(f"line {lineno}: expected 'p=<n>' header, got {line!r}")
            p = int(m.group(1))
            continue
        m = _EDGE_RE.match(line)
        if not m:
            raise FormatError(f"line {lineno}: expected 'a -> b' or 'a -- b', got {line!r}")
        a, op, b = int(m.group(1)), m.group(2), int(m.group(3))
        if op == "->":
            arrows.append((a, b))
        else:
            lines.append((a, b))
    if p is None:
        raise FormatError("missing 'p=<n>' header")
    try:
        return PartiallyDirectedGraph(p, arrows=arrows, lines=lines)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_graph(g: PartiallyDirectedGraph) -> str:
    """Canonical text form: header, arrows sorted, then lines sorted."""
    out = [f"p={g.p}"]
    out.extend(f"{a} -> {b}" for a, b in sorted(g.arrows()))
    out.extend(f"{a} -- {b}" for a, b in sorted(g.lines()))
    return "\n".join(out) + "\n"


def parse_family(text: str, p: int) -> TargetFamily:
    targets: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line == "()":
            targets.append(frozenset())
            continue
        try:
            targets.append(frozenset(int(tok) for tok in line.split(",")))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad target {line!r}") from exc
    if not targets:
        raise FormatError("family file contains no targets")
    return TargetFamily(p, targets)


def format_family(family: TargetFamily) -> str:
    out = []
    for t in family:
        out.append("()" if not t else ",".join(map(str, sorted(t))))
    return "\n".join(out) + "\n"


def _read(src: PathOrFile) -> str:
    if isinstance(src, str):
        with open(src, "r", encoding="utf-8") as fh:
            return fh.read()
    return src.read()


def _write(dst: PathOrFile, text: str) -> None:
    if isinstance(dst, str):
        with open(dst, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        dst.write(text)


def read_graph(src: PathOrFile) -> PartiallyDirectedGraph:
    return parse_graph(_read(src))


def write_graph(dst: PathOrFile, g: PartiallyDirectedGraph) -> None:
    _write(dst, format_graph(g))


def read_family(src: PathOrFile, p: int) -> TargetFamily:
    return parse_family(_read(src), p)


def write_family(dst: PathOrFile, family: TargetFamily) -> None:
    _write(dst, format_family(family))
