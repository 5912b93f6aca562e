"""Console rendering of command results."""

import json
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel

from src.reports.models import (
    CatalanReport,
    PolyResult,
    RunRecord,
    SearchReport,
    VerificationReport,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

# run-dependent fields, printed only with --timing
TIMING_FIELDS = {'runtime_ms', 'elapsed_ms', 'threads'}
FORMATS = ('text', 'json')


class ConsoleReporter:
    """Renders results as text or JSON for stdout."""
    
    def __init__(self, output_format: str = 'text', timing: bool = False):
        """
        Initialize console reporter.
        
        Args:
            output_format: 'text' or 'json'
            timing: Include wall-clock fields; off keeps output reproducible
        """
        if output_format not in FORMATS:
            raise ValueError(f"Unknown output format: {output_format}")
        self.output_format = output_format
        self.timing = timing
        self.logger = logger
    
    def render(self, result: Any) -> str:
        """
        Render one result.
        
        Args:
            result: A report model, or a list of RunRecords
            
        Returns:
            The text to print, without a trailing newline
        """
        if self.output_format == 'json':
            return self._render_json(result)
        if isinstance(result, PolyResult):
            return self._format_poly(result)
        if isinstance(result, VerificationReport):
            return self._format_verification(result)
        if isinstance(result, SearchReport):
            return self._format_search(result)
        if isinstance(result, CatalanReport):
            return self._format_catalan(result)
        if isinstance(result, list):
            return self._format_history(result)
        raise TypeError(f"Cannot render {type(result).__name__}")
    
    def emit(self, result: Any) -> None:
        """Print a result to stdout and log a one-line summary."""
        print(self.render(result))
        summary = self._summary(result)
        if summary:
            self.logger.info("Reported result", extra=summary)
    
    def _render_json(self, result: Any) -> str:
        exclude = None if self.timing else TIMING_FIELDS
        if isinstance(result, list):
            payload: Any = [
                record.model_dump(mode='json', exclude=exclude) for record in result
            ]
        else:
            payload = result.to_json_dict(exclude=exclude)
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    
    def _format_poly(self, result: PolyResult) -> str:
        lines = [result.polynomial]
        if result.reduced_word is not None:
            lines.append(f"reduced word: {result.reduced_word}")
        if result.value_at_ones is not None:
            lines.append(f"value at x=1: {result.value_at_ones}")
        if result.principal is not None:
            lines.append(f"principal specialization: {result.principal}")
        return "\n".join(lines)
    
    def _format_verification(self, report: VerificationReport) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
        status = "PASS" if report.passed else "FAIL"
        lines = [f"{report.identity}: {status} ({report.cases} cases, {report.skipped} skipped)"]
        if params:
            lines.append(f"parameters: {params}")
        lines.extend(report.details)
        if report.counterexample is not None:
            ce = report.counterexample
            lines.append("counterexample: " + " ".join(f"{k}={v}" for k, v in ce.case.items()))
            lines.append(f"  {ce.left_label}: {ce.left}")
            lines.append(f"  {ce.right_label}: {ce.right}")
        if self.timing and report.elapsed_ms is not None:
            lines.append(f"elapsed: {report.elapsed_ms} ms")
        return "\n".join(lines)
    
    def _format_search(self, report: SearchReport) -> str:
        lines = [
            f"n = {report.n}",
            f"max value at x=1: {report.max_value}",
            f"maximizers: {', '.join(report.argmax)}",
            f"all maximizers Richardson: {'yes' if report.all_argmax_richardson else 'no'}",
        ]
        if report.values is not None:
            frame = pd.DataFrame(
                sorted(report.values.items()), columns=['permutation', 'value']
            )
            lines.append(frame.to_string(index=False))
        for finding in report.discrepancies:
            lines.append(f"discrepancy: {finding}")
        if self.timing and report.runtime_ms is not None:
            lines.append(f"runtime: {report.runtime_ms} ms ({report.threads} threads)")
        return "\n".join(lines)
    
    def _format_catalan(self, report: CatalanReport) -> str:
        records = []
        for row in report.rows:
            record: Dict[str, Any] = {'n': row.n, 'C_n': row.catalan}
            for h in range(1, report.h_max + 1):
                record[f'h={h}'] = row.hankel.get(h)
            records.append(record)
        frame = pd.DataFrame(records)
        lines = [frame.to_string(index=False), ""]
        lines.extend(f"C_{row.n}(q) = {row.q_catalan}" for row in report.rows)
        return "\n".join(lines)
    
    def _format_history(self, records: List[RunRecord]) -> str:
        if not records:
            return "no stored runs"
        columns = ['id', 'kind', 'label', 'passed', 'summary']
        if self.timing:
            columns += ['runtime_ms', 'created_at']
        frame = pd.DataFrame([record.model_dump() for record in records])[columns]
        return frame.to_string(index=False)
    
    def _summary(self, result: Any) -> Optional[Dict[str, Any]]:
        if isinstance(result, VerificationReport):
            return {'identity': result.identity, 'passed': result.passed,
                    'cases': result.cases, 'skipped': result.skipped}
        if isinstance(result, SearchReport):
            return {'n': result.n, 'max_value': result.max_value,
                    'argmax_size': len(result.argmax),
                    'discrepancies': len(result.discrepancies)}
        if isinstance(result, BaseModel):
            return {'kind': type(result).__name__}
        return None
