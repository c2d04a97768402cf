"""File formats: incidence CSV, catalog sidecar, membership CSV, JSON reports.

Incidence CSV: UTF-8, comma-separated, header `actor,attribute,kind,weight`
(weight optional, default 1); kind is `affiliation` or `attitude`.

Catalog sidecar: one label per line under `[affiliations]` / `[attitudes]`
section headers.

Membership CSV (analysis-only input): header `attribute,kind,<name>,...`
with one community index per dataset column.
"""

from __future__ import annotations

import csv
import io as _io
import json
from importlib import resources
from pathlib import Path
from typing import Optional, TextIO, Union

from .analysis import MembershipTable, MixingReport, SegregationSummary
from .build import AttributeCatalog, IncidenceRecord
from .errors import (
    EmptyInputError,
    KindMismatchError,
    ParseError,
)
from .graph import VertexKind
from .synth import SurveyDataset

PathLike = Union[str, Path]

_KIND_NAMES = {
    "affiliation": VertexKind.AFFILIATION,
    "attitude": VertexKind.ATTITUDE,
}


def _kind_from_name(raw: str, where: str) -> VertexKind:
    try:
        return _KIND_NAMES[raw]
    except KeyError:
        raise ParseError(f"{where}: kind must be 'affiliation' or 'attitude', got {raw!r}")


def parse_catalog(path: PathLike) -> AttributeCatalog:
    sections: dict[str, list[str]] = {"affiliations": [], "attitudes": []}
    current: Optional[str] = None
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1]
            if name not in sections:
                raise ParseError(f"{path}:{lineno}: unknown section [{name}]")
            current = name
        elif current is None:
            raise ParseError(f"{path}:{lineno}: label before any section header")
        else:
            sections[current].append(line)
    return AttributeCatalog(
        affiliations=sections["affiliations"], attitudes=sections["attitudes"]
    )


def write_catalog(catalog: AttributeCatalog, path: PathLike) -> None:
    lines = ["[affiliations]"]
    lines += catalog.affiliations
    lines.append("[attitudes]")
    lines += catalog.attitudes
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_incidence_csv(
    path: PathLike,
    catalog: Optional[AttributeCatalog] = None,
    name: Optional[str] = None,
) -> SurveyDataset:
    """Read incidence records; the catalog comes from the sidecar if given,
    otherwise it is derived from the records in first-appearance order."""
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInputError(f"{path}: empty file")
        if header[:3] != ["actor", "attribute", "kind"]:
            raise ParseError(f"{path}:1: header must start actor,attribute,kind")
        has_weight = len(header) == 4 and header[3] == "weight"
        if len(header) > 3 and not has_weight:
            raise ParseError(f"{path}:1: unexpected header columns {header[3:]!r}")

        records: list[IncidenceRecord] = []
        seen_kinds: dict[str, VertexKind] = {}
        derived_order: list[str] = []
        for lineno, row in enumerate(reader, 2):
            if not row:
                continue
            if len(row) < 3 or len(row) > 4:
                raise ParseError(f"{path}:{lineno}: expected 3 or 4 fields, got {len(row)}")
            actor, attribute, kind_raw = row[0], row[1], row[2]
            kind = _kind_from_name(kind_raw, f"{path}:{lineno}")
            weight = 1
            if len(row) == 4 and row[3] != "":
                try:
                    weight = int(row[3])
                except ValueError:
                    raise ParseError(f"{path}:{lineno}: weight must be an integer")
                if weight < 1:
                    raise ParseError(f"{path}:{lineno}: weight must be >= 1")
            if attribute in seen_kinds and seen_kinds[attribute] != kind:
                raise KindMismatchError(
                    f"{path}:{lineno}: attribute {attribute!r} appears with two kinds"
                )
            if attribute not in seen_kinds:
                seen_kinds[attribute] = kind
                derived_order.append(attribute)
            records.append(
                IncidenceRecord(actor=actor, attribute=attribute, kind=kind, weight=weight)
            )
    if not records:
        raise EmptyInputError(f"{path}: no records")
    if catalog is None:
        catalog = AttributeCatalog(
            affiliations=[a for a in derived_order if seen_kinds[a] == VertexKind.AFFILIATION],
            attitudes=[a for a in derived_order if seen_kinds[a] == VertexKind.ATTITUDE],
        )
    else:
        for rec in records:
            if rec.attribute in catalog and catalog.kind_of(rec.attribute) != rec.kind:
                raise KindMismatchError(
                    f"{path}: attribute {rec.attribute!r} disagrees with catalog kind"
                )
    return SurveyDataset(name=name or path.stem, records=records, catalog=catalog)


def write_incidence_csv(dataset: SurveyDataset, path: PathLike) -> None:
    """Canonical writer: always four columns, records in order, LF endings."""
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["actor", "attribute", "kind", "weight"])
        for rec in dataset.records:
            writer.writerow([rec.actor, rec.attribute, rec.kind.value, rec.weight])


def parse_membership_csv(
    path_or_file: Union[PathLike, TextIO]
) -> tuple[list[str], dict[str, VertexKind], dict[str, dict[str, int]]]:
    """Read a Table-1-style membership matrix.

    Returns (row labels, kind map, columns keyed by dataset name with
    label -> community index).
    """
    if hasattr(path_or_file, "read"):
        fh = path_or_file
        where = "<stream>"
        close = False
    else:
        fh = Path(path_or_file).open(encoding="utf-8", newline="")
        where = str(path_or_file)
        close = True
    try:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInputError(f"{where}: empty file")
        if header[:2] != ["attribute", "kind"] or len(header) < 3:
            raise ParseError(f"{where}:1: header must be attribute,kind,<dataset>,...")
        names = header[2:]
        rows: list[str] = []
        kinds: dict[str, VertexKind] = {}
        columns: dict[str, dict[str, int]] = {n: {} for n in names}
        for lineno, row in enumerate(reader, 2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(f"{where}:{lineno}: expected {len(header)} fields")
            label = row[0]
            rows.append(label)
            kinds[label] = _kind_from_name(row[1], f"{where}:{lineno}")
            for n, cell in zip(names, row[2:]):
                try:
                    columns[n][label] = int(cell)
                except ValueError:
                    raise ParseError(f"{where}:{lineno}: community index must be an integer")
        if not rows:
            raise EmptyInputError(f"{where}: no rows")
        return rows, kinds, columns
    finally:
        if close:
            fh.close()


def write_membership_csv(table: MembershipTable, path_or_file: Union[PathLike, TextIO]) -> None:
    """Membership matrix in the same format parse_membership_csv reads."""
    if hasattr(path_or_file, "write"):
        fh = path_or_file
        close = False
    else:
        fh = Path(path_or_file).open("w", encoding="utf-8", newline="")
        close = True
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["attribute", "kind"] + [c.name for c in table.columns])
        for r in table.rows:
            writer.writerow(
                [r, table.kinds[r].value] + [c.assignment[r] for c in table.columns]
            )
    finally:
        if close:
            fh.close()


def load_table1() -> tuple[list[str], dict[str, VertexKind], dict[str, dict[str, int]]]:
    """The bundled 26-attribute, 8-country membership fixture."""
    text = resources.files("affilcomm.data").joinpath("table1.csv").read_text("utf-8")
    return parse_membership_csv(_io.StringIO(text))


def mixing_report_dict(report: MixingReport) -> dict:
    return {
        "mixed_count": report.mixed_count,
        "total_communities": report.total_communities,
        "per_community": [
            {"community": c, "affiliations": aff, "attitudes": att}
            for c, aff, att in report.per_community
        ],
    }


def report_json(
    table: MembershipTable,
    mixing: dict[str, MixingReport],
    summary: SegregationSummary,
) -> str:
    """Serialize the pipeline report; key order is fixed for reproducibility."""
    datasets = {}
    for col in table.columns:
        entry: dict = {"membership": {r: col.assignment[r] for r in table.rows if r in col.assignment}}
        if col.q is not None:
            entry["q"] = col.q
        entry["mixing"] = mixing_report_dict(mixing[col.name])
        datasets[col.name] = entry
    payload = {
        "datasets": datasets,
        "summary": {
            "classification": summary.classification,
            "distribution": summary.distribution,
        },
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def format_table(table: MembershipTable, mixing: dict[str, MixingReport]) -> str:
    """Plain-text membership matrix with a modularity and mixing footer."""
    names = [c.name for c in table.columns]
    label_w = max(len(r) for r in table.rows + ["attribute"])
    widths = [max(len(n), 4) for n in names]
    out = []
    head = "attribute".ljust(label_w) + "  " + "  ".join(
        n.rjust(w) for n, w in zip(names, widths)
    )
    out.append(head)
    for r in table.rows:
        cells = []
        for col, w in zip(table.columns, widths):
            cells.append(str(col.assignment.get(r, "-")).rjust(w))
        out.append(r.ljust(label_w) + "  " + "  ".join(cells))
    q_cells = [
        ("-" if c.q is None else f"{c.q:.4f}").rjust(w)
        for c, w in zip(table.columns, widths)
    ]
    out.append("modularity".ljust(label_w) + "  " + "  ".join(q_cells))
    mix_cells = [
        str(mixing[c.name].mixed_count).rjust(w) for c, w in zip(table.columns, widths)
    ]
    out.append("mixed communities".ljust(label_w) + "  " + "  ".join(mix_cells))
    return "\n".join(out) + "\n"
