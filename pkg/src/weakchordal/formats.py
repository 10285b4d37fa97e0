"""Edge-list documents, DOT export and report serialisation."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping

from .graph import Edge, Graph, GraphInputError
from .pipeline import PipelineReport

HIGHLIGHT_COLOR = "purple"


class EdgeListError(ValueError):
    pass


def write_edgelist(g: Graph) -> str:
    """``n m`` header, then one ``u v`` line per edge (u < v) in ascending order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Inverse of :func:`write_edgelist`.

    Edge lines may list endpoints in either order; blank lines and lines
    starting with ``#`` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise EdgeListError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise EdgeListError(f"header values must be non-negative, got {n} {m}")
    if len(rows) - 1 != m:
        raise EdgeListError(f"header declares {m} edges but {len(rows) - 1} follow")
    g = Graph(n)
    for lineno, u, v in rows[1:]:
        try:
            if not g.add_edge(u, v):
                raise EdgeListError(f"line {lineno}: duplicate edge {u} {v}")
        except GraphInputError as exc:
            raise EdgeListError(f"line {lineno}: {exc}") from None
    return g


def export_dot(
    g: Graph,
    highlight: Iterable[tuple[int, int]] = (),
    labels: Mapping[int, str] | None = None,
    name: str = "G",
) -> str:
    """Undirected DOT text; edges in ``highlight`` are drawn purple."""
    marked = {Edge.of(u, v) for u, v in highlight}
    for u, v in marked:
        if not g.has_edge(u, v):
            raise GraphInputError(f"highlighted edge {{{u}, {v}}} not in graph")

    def label(v: int) -> str:
        return json.dumps(str(labels[v] if labels else v))

    out = [f"graph {name} {{"]
    out.extend(f"  {label(v)};" for v in range(g.n))
    for e in g.edges():
        attr = f" [color={HIGHLIGHT_COLOR}]" if e in marked else ""
        out.append(f"  {label(e.u)} -- {label(e.v)}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def format_report(report: PipelineReport, fmt: str = "kv") -> str:
    data = report.to_dict()
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "kv":
        return "".join(f"{k}={_kv(v)}\n" for k, v in data.items())
    raise ValueError(f"unknown report format {fmt!r}")


def _kv(value) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def parse_report(text: str) -> PipelineReport:
    """Read either report format back."""
    text = text.strip()
    if text.startswith("{"):
        return PipelineReport(**json.loads(text))
    fields = dict(line.split("=", 1) for line in text.splitlines() if line)
    flag = fields.pop("input_was_weakly_chordal")
    return PipelineReport(
        input_was_weakly_chordal=flag == "true", **{k: int(v) for k, v in fields.items()}
    )
