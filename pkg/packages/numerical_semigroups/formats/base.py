"""Text, CSV, JSON and JSON-lines rendering of response models.

JSON goes through orjson; every renderer is deterministic for equal input.
"""

from __future__ import annotations

from enum import StrEnum
from typing import TYPE_CHECKING

import orjson

if TYPE_CHECKING:
    from collections.abc import Iterable

    from pydantic import BaseModel

    from numerical_semigroups.models.responses import (
        AnalysisResponse,
        CensusTable,
        RFMatrixReport,
        SemigroupRecord,
        VerifyResponse,
    )

__all__ = [
    "AnalysisFormat",
    "TableFormat",
    "render_analysis",
    "render_census",
    "render_json",
    "render_records",
    "render_verify",
]


class TableFormat(StrEnum):
    """Census output formats."""

    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class AnalysisFormat(StrEnum):
    """Analysis output formats."""

    TEXT = "text"
    JSON = "json"


def render_json(model: BaseModel) -> str:
    """Indented JSON of ``model`` with public field names."""
    return orjson.dumps(model.model_dump(mode="json", by_alias=True), option=orjson.OPT_INDENT_2).decode()


def _census_table(table: CensusTable) -> str:
    labels = [f"e={row.edim} {row.class_}" for row in table.rows]
    width = max([len("class"), *map(len, labels)])
    counts = [str(row.count) for row in table.rows]
    count_width = max([len("count"), *map(len, counts)])
    lines = [
        f"max_gen={table.max_gen} edim={','.join(map(str, table.edim))} "
        f"parity={table.parity} min_gen={table.min_gen}",
        f"{'class':<{width}}  {'count':>{count_width}}",
        f"{'-' * width}  {'-' * count_width}",
    ]
    lines.extend(
        f"{label:<{width}}  {count:>{count_width}}"
        for label, count in zip(labels, counts, strict=True)
    )
    lines.append(
        f"{table.enumerated} enumerated, {table.almost_symmetric} almost symmetric, "
        f"{table.elapsed_seconds:.2f}s on {table.workers} worker(s)"
    )
    return "\n".join(lines)


def render_census(table: CensusTable, fmt: TableFormat | str = TableFormat.TABLE) -> str:
    """Render a census table.

    CSV has the header ``edim,class,count``; JSON is an object keyed
    ``e{d}/{class}``. Neither contains timing, so equal queries give equal bytes.
    """
    fmt = TableFormat(fmt)
    if fmt is TableFormat.CSV:
        lines = ["edim,class,count", *(f"{r.edim},{r.class_},{r.count}" for r in table.rows)]
        return "\n".join(lines) + "\n"
    if fmt is TableFormat.JSON:
        return orjson.dumps(table.counts(), option=orjson.OPT_INDENT_2).decode() + "\n"
    return _census_table(table) + "\n"


def render_records(records: Iterable[SemigroupRecord]) -> str:
    """One compact JSON object per line."""
    return "".join(
        orjson.dumps(record.model_dump(mode="json", by_alias=True)).decode() + "\n"
        for record in records
    )


def _set(values: Iterable[int]) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def _tuple(values: Iterable[int]) -> str:
    return "(" + ", ".join(map(str, values)) + ")"


def _rf_lines(report: RFMatrixReport) -> list[str]:
    shown = len(report.matrices)
    head = f"RF({report.value}): {report.total} matri{'x' if report.total == 1 else 'ces'}"
    if report.truncated:
        head += f", first {shown} shown"
    lines = [head]
    for k, matrix in enumerate(report.matrices):
        if k:
            lines.append("")
        width = max(len(str(x)) for row in matrix for x in row)
        lines.extend("  [" + " ".join(f"{x:>{width}}" for x in row) + "]" for row in matrix)
    return lines


def render_analysis(report: AnalysisResponse) -> str:
    """Human-readable analysis; generator positions are 1-based."""
    lines = [
        "S = ⟨" + ",".join(map(str, report.gens)) + "⟩",
        f"F = {report.frobenius}  genus = {report.genus}  type = {report.type}",
        f"PF = {_set(report.pseudo_frobenius)}",
        f"class: {report.class_}  (all generators odd: {'yes' if report.all_odd else 'no'})",
        f"complete intersection: {'yes' if report.complete_intersection else 'no'}",
    ]
    if report.alpha is not None:
        lines.append(f"alpha = {_tuple(report.alpha)}")
    for rf in report.rf:
        lines.extend(_rf_lines(rf))
    if report.family is not None:
        fam = report.family
        lines.append(
            f"family: {fam.family}  relabeled generators {_tuple(fam.gens)}"
            f"  (positions {' '.join(str(p + 1) for p in fam.perm)})"
        )
        details = [f"alpha = {_tuple(fam.alpha)}"]
        if isinstance(fam.a, list):
            details.append(f"a = {_tuple(fam.a)}")
        elif fam.a is not None:
            details.append(f"a = {fam.a}")
        if fam.b is not None:
            details.append(f"b = {_tuple(fam.b)}")
        if fam.f is not None:
            details.append(f"f = {fam.f}")
        if fam.parity_case is not None:
            details.append(f"parity case ({fam.parity_case})")
        if fam.parity_check is not None:
            details.append(f"parity criterion {'holds' if fam.parity_check else 'FAILS'}")
        if fam.uf_case is not None:
            details.append(f"case {fam.uf_case}")
        lines.append("  " + "  ".join(details))
    if report.family_error is not None:
        lines.append(f"family: {report.family_error}")
    if report.ideal:
        lines.append(f"defining ideal over {_tuple(report.ideal[0].gens)}:")
        lines.extend(f"  {b.text}    (degree {b.degree})" for b in report.ideal)
    return "\n".join(lines) + "\n"


def render_verify(result: VerifyResponse) -> str:
    """One line per suite plus a summary line."""
    width = max(len(s.name) for s in result.suites) if result.suites else 0
    lines = [f"verify max_gen={result.max_gen}"]
    for suite in result.suites:
        status = "PASS" if suite.passed else "FAIL"
        lines.append(
            f"{suite.name:<{width}}  {status}  checked={suite.checked} failures={suite.failures}"
        )
        lines.extend(f"    {example}" for example in suite.counterexamples)
        lines.extend(
            f"    witness {key}: ⟨{','.join(map(str, gens))}⟩"
            for key, gens in suite.witnesses.items()
        )
    lines.append(f"{'passed' if result.passed else 'FAILED'} in {result.elapsed_seconds:.2f}s")
    return "\n".join(lines) + "\n"
