"""End-to-end runs of the command-line interface."""

import json

import pytest

from src.main import EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from src.verification.identities import Case, IdentityVerifier


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestSchur:
    def test_h_flagged(self, capsys):
        code, out = run(capsys, 'schur', '--shape', '(2,1)', '--h', '1')
        assert code == EXIT_OK
        assert out == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3\n"

    @pytest.mark.parametrize("method", ['jacobi-trudi', 'lgv'])
    def test_methods_agree(self, capsys, five_term, method):
        code, out = run(capsys, 'schur', '--shape', '(2,1)', '--h', '1', '--method', method)
        assert code == EXIT_OK and out == f"{five_term}\n"

    def test_empty_shape(self, capsys):
        assert run(capsys, 'schur', '--shape', '()', '--h', '3') == (EXIT_OK, "1\n")

    def test_no_tableaux(self, capsys):
        assert run(capsys, 'schur', '--shape', '(1,1)', '--flags', '(1,1)') == (EXIT_OK, "0\n")

    def test_ordinary_schur(self, capsys):
        code, out = run(capsys, 'schur', '--shape', '(1)', '--vars', '2')
        assert out == "x1 + x2\n"

    def test_json(self, capsys):
        code, out = run(capsys, 'schur', '--shape', '(1)', '--h', '1', '--format', 'json')
        payload = json.loads(out)
        assert payload['schema'] == 1
        assert payload['polynomial'] == "x1 + x2"
        assert payload['terms'][0] == {'coefficient': 1, 'exponents': {'x1': 1}}

    @pytest.mark.parametrize("argv", [
        ['schur', '--shape', '(1,2)', '--h', '1'],
        ['schur', '--shape', '(2,1)', '--flags', '(2)'],
        ['schur', '--shape', '(2,1)', '--vars', '2', '--method', 'lgv'],
        ['schur', '--shape', '(2,1)'],
        ['schur', '--shape', '(2,1)', '--h', '1', '--flags', '(2,3)'],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == EXIT_USAGE


class TestSchubert:
    def test_specializations(self, capsys, five_term):
        code, out = run(capsys, 'schubert', '--perm', '(1432)', '--at-ones', '--principal')
        assert code == EXIT_OK
        assert out.splitlines() == [
            str(five_term),
            "value at x=1: 5",
            "principal specialization: q^4 + q^3 + 2*q^2 + q",
        ]

    def test_bad_permutation(self, capsys):
        assert main(['schubert', '--perm', '(1,1)']) == EXIT_USAGE


class TestVerify:
    def test_woo(self, capsys):
        code, out = run(capsys, 'verify', 'woo', '--n', '4')
        assert code == EXIT_OK
        assert out.splitlines()[0] == "woo: PASS (4 cases, 0 skipped)"

    def test_show_matrix(self, capsys):
        code, out = run(capsys, 'verify', 'flagged-det', '--shape', '(2,1)', '--h', '2',
                        '--show-matrix')
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "flagged-det: PASS (1 cases, 0 skipped)"
        assert sum(line.startswith("(") for line in lines) == 4

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        def broken(self, n=6):
            yield Case(label={'n': str(n)}, sides=[('left', 1), ('right', 2)])

        monkeypatch.setattr(IdentityVerifier, 'woo_cases', broken)
        code, out = run(capsys, 'verify', 'woo', '--n', '2')
        assert code == EXIT_MISMATCH
        assert "counterexample: n=2" in out

    def test_budget_exit_code(self, capsys):
        assert main(['verify', 'wachs', '--n', '7']) == EXIT_BUDGET

    def test_unknown_identity(self, capsys):
        assert main(['verify', 'pieri']) == EXIT_USAGE

    def test_n_zero(self, capsys):
        assert main(['verify', 'woo', '--n', '0']) == EXIT_USAGE


class TestSearch:
    def test_json_is_reproducible(self, capsys):
        code, out = run(capsys, 'search', '--n', '5', '--format', 'json')
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['schema'] == 1
        assert payload['max_value'] == 14
        assert payload['discrepancies'] == []
        assert 'runtime_ms' not in payload

    def test_help_explains_timing_fields(self, capsys):
        code, out = run(capsys, 'search', '--help')
        assert code == EXIT_OK
        assert "JSON includes runtime_ms, elapsed_ms and threads only with --timing" in " ".join(out.split())

    def test_tie_in_s2_is_reported(self, capsys):
        code, out = run(capsys, 'search', '--n', '2')
        assert code == EXIT_OK
        assert "discrepancy: S_2: ties not listed in the published table: (21)" in out

    def test_beyond_budget(self, capsys):
        assert main(['search', '--n', '9']) == EXIT_BUDGET
        assert main(['search', '--n', '8']) == EXIT_BUDGET

    def test_n_zero(self, capsys):
        code, out = run(capsys, 'search', '--n', '0')
        assert code == EXIT_USAGE
        assert "max" not in out


def test_catalan(capsys):
    code, out = run(capsys, 'catalan', '--n-max', '3', '--h-max', '2')
    assert code == EXIT_OK
    assert "C_3(q) = q^3 + q^2 + 2*q + 1" in out


def test_save_and_history(capsys, db_path):
    assert run(capsys, 'history', '--db', db_path) == (EXIT_OK, "no stored runs\n")
    run(capsys, 'verify', 'woo', '--n', '2', '--save', '--db', db_path)
    run(capsys, 'search', '--n', '3', '--save', '--db', db_path)
    code, out = run(capsys, 'history', '--db', db_path, '--format', 'json')
    records = json.loads(out)
    assert code == EXIT_OK
    assert {record['kind'] for record in records} == {'search', 'verify'}
    code, out = run(capsys, 'history', '--db', db_path, '--kind', 'search', '--format', 'json')
    assert [record['label'] for record in json.loads(out)] == ['S_3']
