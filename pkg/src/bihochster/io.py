"""Facet-list files and table rendering.

Text format (``.cplx``)::

    4
    1 2
    1 3
    -

The first line is ``m``; each further line is one facet as space separated
vertices, ``-`` for the empty facet.  Blank lines and ``#`` comments are
ignored.  A file whose first non-blank character is ``{`` is read as JSON
``{"m": 4, "facets": [[1, 2], [1, 3]]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import ComplexError, SimplicialComplex, facets, format_face, from_facets, vertices_of
from .hochster import BigradedTable
from .linalg import AbelianGroup


class InputError(ValueError):
    """Malformed complex file; the message carries the line number."""


def parse_complex(text: str, source: str = "<input>") -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        return _parse_json(text, source)
    m = None
    facet_list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m is None:
            try:
                m = int(line)
            except ValueError:
                raise InputError(f"{source}:{lineno}: expected vertex count, got {line!r}") from None
            if m < 1:
                raise InputError(f"{source}:{lineno}: vertex count must be positive")
            continue
        if line == "-":
            facet_list.append(())
            continue
        try:
            verts = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"{source}:{lineno}: non-integer vertex in {line!r}") from None
        bad = [v for v in verts if not 1 <= v <= m]
        if bad:
            raise InputError(f"{source}:{lineno}: vertex {bad[0]} outside [1, {m}]")
        facet_list.append(verts)
    if m is None:
        raise InputError(f"{source}: empty file")
    try:
        return from_facets(m, facet_list)
    except ComplexError as exc:
        raise InputError(f"{source}: {exc}") from None


def _parse_json(text: str, source: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}: invalid JSON ({exc.msg})") from None
    try:
        m = int(data["m"])
        facet_list = [tuple(int(v) for v in f) for f in data["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: JSON must have integer 'm' and list 'facets' ({exc})") from None
    for f in facet_list:
        if any(not 1 <= v <= m for v in f):
            raise InputError(f"{source}: facet {list(f)} not contained in [1, {m}]")
    try:
        return from_facets(m, facet_list)
    except ComplexError as exc:
        raise InputError(f"{source}: {exc}") from None


def load_complex(path) -> SimplicialComplex:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_complex(text, str(path))


def dump_complex(K: SimplicialComplex) -> str:
    lines = [str(K.m)]
    for f in facets(K):
        lines.append(" ".join(map(str, vertices_of(f))) if f else "-")
    return "\n".join(lines) + "\n"


def torsion_text(g: AbelianGroup) -> str:
    return ",".join(map(str, g.torsion))


def table_rows(table: BigradedTable) -> list[dict]:
    return [{"bidegree": [-k, 2 * l], "k": k, "l": l, "free_rank": g.free_rank,
             "torsion": list(g.torsion)} for k, l, g in table.rows()]


def render_table(table: BigradedTable, fmt: str = "tsv") -> str:
    """Render a bigraded table; rows are ``k, 2l, free_rank, torsion``."""
    rows = table.rows()
    if fmt == "json":
        return json.dumps({"kind": table.kind, "m": table.m, "entries": table_rows(table)},
                          indent=2) + "\n"
    if fmt == "md":
        out = [f"| (-k, 2l) | {table.kind} |", "|---|---|"]
        out += [f"| ({-k}, {2 * l}) | {g} |" for k, l, g in rows]
        if not rows:
            out.append(f"\n{table.kind} = 0")
        return "\n".join(out) + "\n"
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    out = ["k\t2l\tfree_rank\ttorsion"]
    out += [f"{k}\t{2 * l}\t{g.free_rank}\t{torsion_text(g)}" for k, l, g in rows]
    if not rows:
        out.append(f"# {table.kind} = 0")
    return "\n".join(out) + "\n"


def render_subcomplex_homology(entries: list[tuple[int, int, AbelianGroup]], fmt: str = "tsv") -> str:
    """Rows ``(J, n, group)`` of nonzero reduced homology of full subcomplexes."""
    if fmt == "json":
        return json.dumps([{"J": list(vertices_of(J)), "n": n, "free_rank": g.free_rank,
                            "torsion": list(g.torsion)} for J, n, g in entries], indent=2) + "\n"
    if fmt == "md":
        out = ["| J | n | H̃_n(K_J) |", "|---|---|---|"]
        out += [f"| {format_face(J)} | {n} | {g} |" for J, n, g in entries]
        return "\n".join(out) + "\n"
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    out = ["J\tn\tfree_rank\ttorsion"]
    out += [f"{','.join(map(str, vertices_of(J))) or '-'}\t{n}\t{g.free_rank}\t{torsion_text(g)}"
            for J, n, g in entries]
    return "\n".join(out) + "\n"
