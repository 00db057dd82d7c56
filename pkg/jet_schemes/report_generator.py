"""
Rendering of command results as plain-text tables, JSON or CSV.

Output depends only on the results, never on timing or environment, so
identical runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import List, Sequence

from pydantic import BaseModel

from jet_schemes.config import OutputFormat
from jet_schemes.schemas import (
    BettiOutput,
    GroebnerOutput,
    HilbertOutput,
    LimitOutput,
    SeriesModel,
    SyzygyOutput,
    VerifyReport,
)


def _integral(value: str) -> int:
    number = Fraction(value)
    if number.denominator != 1:
        raise ValueError(f"non-integral coefficient {value} in CSV output")
    return number.numerator


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _series_rows(series: SeriesModel, prefix: Sequence[object] = ()) -> List[List[object]]:
    return [[*prefix, i, j, _integral(c)] for i, j, c in series.terms]


class ReportGenerator:
    """Render command outputs in the configured format."""

    def __init__(self, format: OutputFormat = OutputFormat.TABLE):
        self.format = OutputFormat(format)

    def _json(self, payload) -> str:
        if isinstance(payload, BaseModel):
            return payload.model_dump_json(indent=2) + "\n"
        return json.dumps([p.model_dump(mode="json") for p in payload], indent=2) + "\n"

    # -- hilbert ------------------------------------------------------

    def hilbert(self, outputs: List[HilbertOutput]) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(outputs)
        if self.format is OutputFormat.CSV:
            if len(outputs) == 1:
                return _csv(["q_deg", "t_deg", "value"], _series_rows(outputs[0].series))
            rows = [row for out in outputs for row in _series_rows(out.series, (out.n,))]
            return _csv(["n", "q_deg", "t_deg", "value"], rows)
        blocks = []
        for out in outputs:
            lines = [f"H_{out.n} ({out.method}), q <= {out.series.qmax}, t <= {out.series.tmax}"]
            lines.append(out.series.to_series().to_table())
            if out.mismatch is not None:
                lines.append(f"MISMATCH: {out.mismatch}")
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    # -- groebner -----------------------------------------------------

    def groebner(self, outputs: List[GroebnerOutput]) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(outputs)
        if self.format is OutputFormat.CSV:
            if any(out.census for out in outputs):
                rows = [[out.n, c.degree, c.actual, c.predicted] for out in outputs for c in out.census]
                return _csv(["n", "degree", "actual", "predicted"], rows)
            rows = [[out.n, idx, g] for out in outputs for idx, g in enumerate(out.gens)]
            return _csv(["n", "index", "polynomial"], rows)
        blocks = []
        for out in outputs:
            kind = "recursive" if out.recursive else ("reduced" if out.reduced else "Buchberger")
            lines = [f"Groebner basis of I_{out.n} ({kind}, {len(out.gens)} elements)"]
            lines.extend(f"  {g}" for g in out.gens)
            if out.census:
                lines.append("degree  actual  predicted")
                lines.extend(f"{c.degree:>6}  {c.actual:>6}  {c.predicted:>9}" for c in out.census)
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    # -- betti --------------------------------------------------------

    def betti(self, outputs: List[BettiOutput]) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(outputs)
        if self.format is OutputFormat.CSV:
            rows = [[out.n, r.i, r.rank, r.graded or ""] for out in outputs for r in out.rows]
            return _csv(["n", "i", "rank", "graded"], rows)
        blocks = []
        for out in outputs:
            lines = [f"Betti table of R_{out.n}/I_{out.n}, projective dimension {out.projective_dimension}"]
            for r in out.rows:
                lines.append(f"{r.i:>3}  {r.rank:>6}" + (f"  {r.graded}" if r.graded is not None else ""))
            for name, ok in out.checks.items():
                lines.append(f"{name}: {'ok' if ok else 'FAILED'}")
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    # -- syzygy -------------------------------------------------------

    def syzygy(self, outputs: List[SyzygyOutput]) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(outputs)
        if self.format is OutputFormat.CSV:
            rows = [[out.n, s.qdeg, s.tdeg, s.kernel_dim, s.submodule_dim] for out in outputs for s in out.slices]
            return _csv(["n", "q_deg", "t_deg", "kernel_dim", "submodule_dim"], rows)
        blocks = []
        for out in outputs:
            suffix = " without nu_1j, nu_2j" if out.drop_nu12 else ""
            lines = [f"Ker(phi_{out.n}) generation{suffix}", "q_deg  t_deg  kernel  submodule"]
            for s in out.slices:
                if s.kernel_dim or s.submodule_dim:
                    lines.append(f"{s.qdeg:>5}  {s.tdeg:>5}  {s.kernel_dim:>6}  {s.submodule_dim:>9}")
            lines.append("verdict: " + ("pass" if out.passed else "FAIL"))
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    # -- limit --------------------------------------------------------

    def limit(self, out: LimitOutput) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(out)
        if self.format is OutputFormat.CSV:
            return _csv(["q_deg", "t_deg", "value"], _series_rows(out.series))
        lines = [f"H_inf, q <= {out.series.qmax}, t <= {out.series.tmax}", out.series.to_series().to_table()]
        lines.append(f"fermionic = bosonic: {'ok' if out.bosonic_agrees else 'FAILED'}")
        lines.append(f"stabilization threshold: {out.threshold} ({'ok' if out.stabilized else 'FAILED'})")
        for rr in out.rr:
            lines.append(f"{rr.which}: {rr.match if rr.equal else 'no product matches'}")
        if out.gb_window is not None:
            lines.append(f"Groebner window: {out.gb_window}")
        if out.betti_infinity is not None:
            lines.append("h^(i, inf)")
            lines.append(out.betti_infinity.to_series().to_table())
        return "\n".join(lines) + "\n"

    # -- verify -------------------------------------------------------

    def verify(self, report: VerifyReport) -> str:
        if self.format is OutputFormat.JSON:
            return self._json(report)
        if self.format is OutputFormat.CSV:
            rows = [[name, s.status, s.first_failure or ""] for name, s in report.suites.items()]
            return _csv(["suite", "status", "first_failure"], rows)
        lo, hi = report.n_range
        lines = [f"Verification for n in {lo}..{hi}"]
        for name, suite in report.suites.items():
            lines.append(f"  {name:<10} {suite.status}")
        lines.append("PASS" if report.passed else f"FAIL: {report.first_failure}")
        return "\n".join(lines) + "\n"


__all__ = ["ReportGenerator"]
