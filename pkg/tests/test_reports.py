"""Text and JSON rendering of command results."""

import json

import pytest

from src.reports.console_reporter import ConsoleReporter
from src.reports.models import (
    CatalanReport,
    CatalanRow,
    Counterexample,
    PolyResult,
    RunRecord,
    SearchReport,
    VerificationReport,
)


@pytest.fixture
def search_report():
    return SearchReport(
        n=3, max_value=2, argmax=["(132)"], all_argmax_richardson=True,
        runtime_ms=12, threads=2,
    )


def test_unknown_format():
    with pytest.raises(ValueError):
        ConsoleReporter('yaml')


def test_argmax_must_not_be_empty():
    with pytest.raises(ValueError):
        SearchReport(n=1, max_value=1, argmax=[], all_argmax_richardson=True)


class TestText:
    def test_polynomial_comes_first(self):
        result = PolyResult(kind='schubert', inputs={'perm': '(132)'}, polynomial="x1 + x2",
                            terms=[], value_at_ones=2, reduced_word="2 1")
        lines = ConsoleReporter().render(result).splitlines()
        assert lines == ["x1 + x2", "reduced word: 2 1", "value at x=1: 2"]

    def test_verification_failure(self):
        report = VerificationReport(
            identity='woo', params={'n': '3'}, cases=2, passed=False, elapsed_ms=5,
            counterexample=Counterexample(case={'n': '2'}, left_label='a', left='1',
                                          right_label='b', right='2'),
        )
        text = ConsoleReporter().render(report)
        assert text.splitlines() == [
            "woo: FAIL (2 cases, 0 skipped)",
            "parameters: n=3",
            "counterexample: n=2",
            "  a: 1",
            "  b: 2",
        ]

    def test_timing_is_opt_in(self, search_report):
        assert "runtime" not in ConsoleReporter().render(search_report)
        assert "runtime: 12 ms (2 threads)" in ConsoleReporter(timing=True).render(search_report)

    def test_search_with_discrepancy(self, search_report):
        search_report.discrepancies = ["S_3: maximum 2, published [3]"]
        text = ConsoleReporter().render(search_report)
        assert "maximizers: (132)" in text
        assert text.endswith("discrepancy: S_3: maximum 2, published [3]")

    def test_catalan_table(self):
        report = CatalanReport(h_max=1, rows=[
            CatalanRow(n=1, catalan=1, q_catalan="1", hankel={1: 1}),
            CatalanRow(n=2, catalan=2, q_catalan="q + 1", hankel={1: 2}),
        ])
        text = ConsoleReporter().render(report)
        assert "C_2(q) = q + 1" in text
        assert text.splitlines()[0].split() == ['n', 'C_n', 'h=1']

    def test_empty_history(self):
        assert ConsoleReporter().render([]) == "no stored runs"

    def test_history(self):
        records = [RunRecord(id=1, kind='verify', label='woo', passed=True, summary="3 cases, 0 skipped")]
        text = ConsoleReporter().render(records)
        assert "woo" in text and "runtime_ms" not in text


class TestJson:
    def test_schema_and_sorted_keys(self, search_report):
        payload = json.loads(ConsoleReporter('json').render(search_report))
        assert payload['schema'] == 1
        assert payload['argmax'] == ["(132)"]
        assert not {'runtime_ms', 'threads'} & set(payload)

    def test_timing_fields_with_timing(self, search_report):
        payload = json.loads(ConsoleReporter('json', timing=True).render(search_report))
        assert payload['runtime_ms'] == 12 and payload['threads'] == 2

    def test_history_list(self):
        records = [RunRecord(id=4, kind='search', label='S_3', passed=True, summary="max 2 at (132)",
                             runtime_ms=9)]
        payload = json.loads(ConsoleReporter('json').render(records))
        assert payload == [{'created_at': None, 'id': 4, 'kind': 'search', 'label': 'S_3',
                            'passed': True, 'summary': "max 2 at (132)"}]
