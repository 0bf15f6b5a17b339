"""Serialization: the line-oriented graph document, DOT export, Cayley-table CSV.

Graph document, version 1::

    # comment lines start with '#', blank lines are ignored
    format_version 1
    vertex_count 4
    label 0 e            (optional, one per vertex, any order)
    edge 0 1             (i < j, strictly increasing lexicographic order)

Writers always emit the canonical form, so two documents describe the same
labelled graph exactly when their bytes agree.
"""

from __future__ import annotations

import csv
import io as _io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph
from .groups import FiniteGroup, GroupError

__all__ = [
    "FORMAT_VERSION",
    "DocumentError",
    "CayleyTableError",
    "GraphDocument",
    "dumps_document",
    "loads_document",
    "read_document",
    "write_document",
    "to_dot",
    "read_cayley_csv",
    "parse_cayley_csv",
]

FORMAT_VERSION = 1


class DocumentError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


class CayleyTableError(GroupError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class GraphDocument:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    format_version: int = FORMAT_VERSION
    comments: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b in edges:
            if not (0 <= a < b < self.vertex_count):
                raise DocumentError(f"bad edge ({a}, {b})")
        if list(edges) != sorted(set(edges)):
            raise DocumentError("edges must be sorted and free of duplicates")
        if self.labels is not None and self.vertex_count == 0:
            object.__setattr__(self, "labels", None)
        if self.labels is not None:
            if len(self.labels) != self.vertex_count:
                raise DocumentError(f"{len(self.labels)} labels for {self.vertex_count} vertices")
            for s in self.labels:
                if not s or s != s.strip() or "\n" in s:
                    raise DocumentError(f"invalid label {s!r}")

    @classmethod
    def from_graph(
        cls, X: Graph, labels: Sequence[str] | None = None, comments: Iterable[str] = ()
    ) -> GraphDocument:
        return cls(
            X.vertex_count,
            tuple(X.edges()),
            None if labels is None else tuple(labels),
            comments=tuple(comments),
        )

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.vertex_count, self.edges)


def dumps_document(doc: GraphDocument) -> str:
    lines = [f"# {c}" if c else "#" for c in doc.comments]
    lines.append(f"format_version {doc.format_version}")
    lines.append(f"vertex_count {doc.vertex_count}")
    if doc.labels is not None:
        lines.extend(f"label {i} {s}" for i, s in enumerate(doc.labels))
    lines.extend(f"edge {a} {b}" for a, b in doc.edges)
    return "\n".join(lines) + "\n"


def _int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DocumentError(f"{what} must be an integer, got {tok!r}", lineno) from None


def loads_document(text: str) -> GraphDocument:
    version = None
    n = None
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "format_version":
            version = _int(rest, "format_version", lineno)
            if version != FORMAT_VERSION:
                raise DocumentError(f"unsupported format_version {version}", lineno)
        elif key == "vertex_count":
            if version is None:
                raise DocumentError("vertex_count before format_version", lineno)
            if n is not None:
                raise DocumentError("duplicate vertex_count", lineno)
            n = _int(rest, "vertex_count", lineno)
            if n < 0:
                raise DocumentError("vertex_count must be non-negative", lineno)
        elif key in ("label", "edge"):
            if n is None:
                raise DocumentError(f"{key} before vertex_count", lineno)
            if key == "label":
                idx_tok, _, name = rest.partition(" ")
                i = _int(idx_tok, "label index", lineno)
                name = name.strip()
                if not 0 <= i < n:
                    raise DocumentError(f"label index {i} out of range", lineno)
                if i in labels:
                    raise DocumentError(f"duplicate label for vertex {i}", lineno)
                if not name:
                    raise DocumentError("empty label", lineno)
                labels[i] = name
            else:
                parts = rest.split()
                if len(parts) != 2:
                    raise DocumentError("edge needs exactly two indices", lineno)
                a, b = (_int(t, "edge endpoint", lineno) for t in parts)
                if not (0 <= a < b < n):
                    raise DocumentError(f"edge ({a}, {b}) must satisfy 0 <= i < j < {n}", lineno)
                if edges and (a, b) <= edges[-1]:
                    raise DocumentError(f"edge ({a}, {b}) out of order or duplicated", lineno)
                edges.append((a, b))
        else:
            raise DocumentError(f"unknown keyword {key!r}", lineno)
    if version is None or n is None:
        raise DocumentError("missing format_version or vertex_count header")
    if labels and len(labels) != n:
        missing = min(set(range(n)) - labels.keys())
        raise DocumentError(f"labels given for some vertices but not vertex {missing}")
    return GraphDocument(
        n,
        tuple(edges),
        tuple(labels[i] for i in range(n)) if labels else None,
        version,
        tuple(comments),
    )


def read_document(path: str | Path) -> GraphDocument:
    return loads_document(Path(path).read_text())


def write_document(doc: GraphDocument, path: str | Path) -> None:
    Path(path).write_text(dumps_document(doc))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    X: Graph,
    labels: Sequence[str] | None = None,
    *,
    dotted: Iterable[tuple[int, int]] = (),
    name: str = "G",
) -> str:
    """Render ``X`` as a DOT ``graph``; edges listed in ``dotted`` get ``style=dotted``."""
    marked = {(min(a, b), max(a, b)) for a, b in dotted}
    out = [f"graph {_dot_quote(name)} {{"]
    for v in range(X.vertex_count):
        text = labels[v] if labels is not None else str(v)
        out.append(f"  {v} [label={_dot_quote(text)}];")
    for a, b in X.edges():
        style = " [style=dotted]" if (a, b) in marked else ""
        out.append(f"  {a} -- {b}{style};")
    out.append("}")
    return "\n".join(out) + "\n"


def parse_cayley_csv(text: str, name: str = "table") -> FiniteGroup:
    """Parse a 0-based Cayley table, one row per line.

    The identity is detected as the unique two-sided neutral element and
    relabelled to index 0; the other elements keep their relative order and
    are labelled by their original indices.
    """
    rows: list[list[int]] = []
    linenos: list[int] = []
    for lineno, row in enumerate(csv.reader(_io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        try:
            rows.append([int(c) for c in row])
        except ValueError:
            raise CayleyTableError("non-integer entry", lineno) from None
        linenos.append(lineno)
    n = len(rows)
    if n == 0:
        raise CayleyTableError("empty table")
    full = list(range(n))
    for r, lineno in zip(rows, linenos):
        if len(r) != n:
            raise CayleyTableError(f"expected {n} entries, got {len(r)}", lineno)
        if sorted(r) != full:
            raise CayleyTableError("row is not a permutation of 0..n-1", lineno)
    table = np.array(rows, dtype=np.int64)
    for j in range(n):
        col = table[:, j]
        seen: set[int] = set()
        for i, x in enumerate(col):
            if int(x) in seen:
                raise CayleyTableError(f"column {j} repeats entry {int(x)}", linenos[i])
            seen.add(int(x))
    ar = np.arange(n)
    neutral = [
        e for e in range(n) if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar)
    ]
    if len(neutral) != 1:
        raise CayleyTableError("no two-sided identity element")
    e = neutral[0]
    left = table[table]
    right = table[:, table]
    bad = np.argwhere(left != right)
    if bad.size:
        i, j, k = (int(x) for x in bad[0])
        raise CayleyTableError(f"associativity fails for ({i}, {j}, {k})", linenos[i])
    perm = [e] + [x for x in range(n) if x != e]
    pos = np.empty(n, dtype=np.int64)
    pos[perm] = np.arange(n)
    relabelled = pos[table[np.ix_(perm, perm)]]
    return FiniteGroup(relabelled, labels=tuple(str(x) for x in perm), name=name)


def read_cayley_csv(path: str | Path) -> FiniteGroup:
    path = Path(path)
    return parse_cayley_csv(path.read_text(), name=path.stem)
