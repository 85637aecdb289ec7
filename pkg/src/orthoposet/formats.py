"""The poset text format, DOT export, and the JSON report document.

Text grammar (line based, '#' starts a comment, blank lines are ignored):

    poset <name>
    elements <label> <label> ...
    rel <x> <y>        # any number of lines; asserts x < y

Relation lines may be cover edges or arbitrary order assertions; the builder
closes them transitively.  A self-pair ``rel a a`` is accepted as a no-op.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .analysis import AnalysisReport
from .errors import DuplicateLabelError, PosetSyntaxError, UnknownLabelError
from .poset import Poset, build_poset

SCHEMA_VERSION = 1
TOOL_NAME = "orthoposet"


@dataclass(frozen=True)
class PosetDocument:
    """A parsed poset description; round-trips through render/parse exactly."""

    name: str
    labels: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]

    def build(self, *, cap: int | None = None) -> Poset:
        return build_poset(self.labels, self.pairs, cap=cap)


def parse_poset(text: str) -> PosetDocument:
    """Parse one poset document.

    Raises:
        PosetSyntaxError: malformed line (carries the line number).
        DuplicateLabelError / UnknownLabelError: bad labels.
    """
    name: str | None = None
    labels: tuple[str, ...] | None = None
    pairs: list[tuple[str, str]] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if name is None:
            if tokens[0] != "poset" or len(tokens) != 2:
                raise PosetSyntaxError("expected 'poset <name>'", lineno)
            name = tokens[1]
        elif labels is None:
            if tokens[0] != "elements" or len(tokens) < 2:
                raise PosetSyntaxError("expected 'elements <label> ...'", lineno)
            for x in tokens[1:]:
                if x in seen:
                    raise DuplicateLabelError(f"line {lineno}: duplicate element {x!r}")
                seen.add(x)
            labels = tuple(tokens[1:])
        else:
            if tokens[0] != "rel" or len(tokens) != 3:
                raise PosetSyntaxError("expected 'rel <x> <y>'", lineno)
            for x in tokens[1:]:
                if x not in seen:
                    raise UnknownLabelError(f"line {lineno}: unknown element {x!r}")
            pairs.append((tokens[1], tokens[2]))
    if name is None:
        raise PosetSyntaxError("empty document", 1)
    if labels is None:
        raise PosetSyntaxError("missing 'elements' line", 1)
    return PosetDocument(name=name, labels=labels, pairs=tuple(pairs))


def render_poset(doc: PosetDocument) -> str:
    lines = [f"poset {doc.name}", "elements " + " ".join(doc.labels)]
    lines.extend(f"rel {x} {y}" for x, y in doc.pairs)
    return "\n".join(lines) + "\n"


def document_digest(doc: PosetDocument) -> str:
    """Digest of the canonical rendering, independent of source formatting."""
    return hashlib.sha256(render_poset(doc).encode("utf-8")).hexdigest()


def to_dot(p: Poset, name: str = "poset") -> str:
    """Hasse diagram as a DOT digraph; edges are the transitive reduction,
    drawn bottom-up."""
    out = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for x in p.names:
        out.append(f'  "{x}";')
    for x, y in p.transitive_reduction():
        out.append(f'  "{x}" -> "{y}";')
    out.append("}")
    return "\n".join(out) + "\n"


def report_document(doc: PosetDocument, report: AnalysisReport, version: str) -> dict:
    """Assemble the JSON-ready report payload with a fixed key order."""
    witnesses: dict[str, object] = {
        "powerset_iso": None,
        "forbidden_configuration": None,
        "crossing_pattern": None,
    }
    if report.powerset_iso is not None:
        witnesses["powerset_iso"] = [
            [src, dst] for src, dst in report.powerset_iso.label_map().items()
        ]
    if report.forbidden is not None:
        witnesses["forbidden_configuration"] = report.forbidden.as_dict()
    if report.crossing is not None:
        witnesses["crossing_pattern"] = report.crossing.as_dict()
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": version},
        "input": {
            "name": doc.name,
            "digest": document_digest(doc),
            "elements": list(doc.labels),
        },
        "flags": dict(report.flags),
        "sizes": dict(report.sizes),
        "star_table": dict(report.star_table) if report.star_table is not None else None,
        "closed_sets": (
            [list(s) for s in report.closed_sets]
            if report.closed_sets is not None
            else None
        ),
        "witnesses": witnesses,
        "theorems": dict(report.theorems),
    }


def report_json(doc: PosetDocument, report: AnalysisReport, version: str) -> str:
    """Deterministic JSON: identical input and version give identical bytes."""
    return json.dumps(report_document(doc, report, version), indent=2) + "\n"
