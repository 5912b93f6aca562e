"""Command-line entry point for schurkit."""

import argparse
import sys
from typing import Any, Dict, List, Optional, Tuple

from src.config import config
from src.errors import (
    BudgetExceededError,
    DimensionError,
    DomainError,
    IdentityMismatchError,
    ParseError,
)
from src.fixtures.published_table import compare_with_published, load_published_table
from src.lattice import Variant, h_flagged_via_lgv
from src.perms import parse_permutation
from src.polyring import LaurentPoly, principal_specialization
from src.reports.console_reporter import FORMATS, ConsoleReporter
from src.reports.models import PolyResult
from src.schubert import STRATEGIES, reduced_word, schubert_poly
from src.search import MaxSearch, catalan_table
from src.shapes import Flag, parse_partition
from src.shapes.partition import parse_flag
from src.storage.database import get_database
from src.tableaux import flagged_schur, h_flagged_schur, jacobi_trudi, schur_polynomial
from src.verification.identities import IDENTITIES, IdentityVerifier
from src.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SCHUR_METHODS = ('tableaux', 'jacobi-trudi', 'lgv')


def _poly_result(kind: str, inputs: Dict[str, str], poly: LaurentPoly, **extra: Any) -> PolyResult:
    return PolyResult(kind=kind, inputs=inputs, polynomial=str(poly),
                      terms=poly.to_terms(), **extra)


class SchurkitCLI:
    """Parses arguments and dispatches to the library."""
    
    def __init__(self):
        """Initialize the command-line interface."""
        self.logger = logger
        self.parser = self.build_parser()
    
    def build_parser(self) -> argparse.ArgumentParser:
        """Build the argument parser with one subparser per command."""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--format', choices=FORMATS, default='text',
                            help='Output format; JSON includes runtime_ms, elapsed_ms and '
                                 'threads only with --timing')
        common.add_argument('--threads', type=int, default=None,
                            help='Worker processes (default from config)')
        common.add_argument('--budget-override', action='store_true',
                            help='Allow sizes beyond the default limits')
        common.add_argument('--timing', action='store_true',
                            help='Include wall-clock fields in the output')
        
        parser = argparse.ArgumentParser(
            prog='schurkit',
            description='Flagged Schur and Schubert polynomials with identity verification'
        )
        subparsers = parser.add_subparsers(dest='command', required=True)
        
        schur = subparsers.add_parser('schur', parents=[common], help='Flagged Schur polynomial')
        schur.add_argument('--shape', required=True, help='Partition, e.g. "(2,1)"')
        bounds = schur.add_mutually_exclusive_group(required=True)
        bounds.add_argument('--h', type=int, help='h-flag (h+1, ..., h+m)')
        bounds.add_argument('--flags', help='Explicit flag, e.g. "(2,3)"')
        bounds.add_argument('--vars', type=int, help='Ordinary Schur polynomial in x1..xN')
        schur.add_argument('--method', choices=SCHUR_METHODS, default='tableaux')
        schur.set_defaults(handler=self.cmd_schur)
        
        schubert = subparsers.add_parser('schubert', parents=[common], help='Schubert polynomial')
        schubert.add_argument('--perm', required=True, help='Permutation, e.g. "(1432)"')
        schubert.add_argument('--at-ones', action='store_true', help='Also evaluate at x=1')
        schubert.add_argument('--principal', action='store_true',
                              help='Also substitute x_i -> q^(i-1)')
        schubert.add_argument('--word', action='store_true', help='Show a reduced word for w')
        schubert.add_argument('--strategy', choices=STRATEGIES, default='smallest')
        schubert.set_defaults(handler=self.cmd_schubert)
        
        verify = subparsers.add_parser('verify', parents=[common], help='Check an identity')
        verify.add_argument('identity', choices=IDENTITIES)
        verify.add_argument('--max-shape', help='Sweep all subdiagrams of this partition')
        verify.add_argument('--max-flag', type=int, help='Largest flag bound (jacobi-trudi)')
        verify.add_argument('--shape', help='Check a single partition')
        verify.add_argument('--flags', help='Flag for a single jacobi-trudi check')
        verify.add_argument('--h', type=int, help='Single value of h')
        verify.add_argument('--h-max', type=int, help='Sweep h = 1..H')
        verify.add_argument('--n', type=int, help='Size of the permutations or staircase')
        verify.add_argument('--variant', choices=[v.value for v in Variant], default='plain',
                            help='Path lengthening (lgv)')
        verify.add_argument('--trace', action='store_true', help='Print noncrossing families (lgv)')
        verify.add_argument('--show-matrix', action='store_true',
                            help='Print determinant entries as 1-flagged polynomials')
        verify.add_argument('--save', action='store_true', help='Store the report')
        verify.add_argument('--db', help='Database path (default from config)')
        verify.set_defaults(handler=self.cmd_verify)
        
        search = subparsers.add_parser('search', parents=[common],
                                       help='Largest Schubert value at x=1 over S_n')
        search.add_argument('--n', type=int, required=True)
        search.add_argument('--keep-values', action='store_true',
                            help='List the value of every permutation')
        search.add_argument('--save', action='store_true', help='Store the report')
        search.add_argument('--db', help='Database path (default from config)')
        search.set_defaults(handler=self.cmd_search)
        
        catalan = subparsers.add_parser('catalan', parents=[common],
                                        help='Catalan, q-Catalan and Catalan-Hankel table')
        catalan.add_argument('--n-max', type=int, default=6)
        catalan.add_argument('--h-max', type=int, default=3)
        catalan.set_defaults(handler=self.cmd_catalan)
        
        history = subparsers.add_parser('history', parents=[common], help='Stored runs')
        history.add_argument('--kind', choices=('search', 'verify'))
        history.add_argument('--limit', type=int, default=20)
        history.add_argument('--db', help='Database path (default from config)')
        history.set_defaults(handler=self.cmd_history)
        
        return parser
    
    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Parse arguments, run the command and print its result.
        
        Returns:
            0 on success, 1 on an identity mismatch, 2 on bad input, 3 when a
            budget is exceeded
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)
        
        try:
            result, status = args.handler(args)
        except (ParseError, DomainError, DimensionError) as e:
            self.logger.error(f"Invalid input: {e}", extra={'command': args.command})
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except BudgetExceededError as e:
            self.logger.error(f"Budget exceeded: {e}", extra={'command': args.command})
            print(f"budget exceeded: {e}", file=sys.stderr)
            return EXIT_BUDGET
        except IdentityMismatchError as e:
            self.logger.error(f"Identity mismatch: {e}", extra={'command': args.command})
            print(f"mismatch: {e}", file=sys.stderr)
            return EXIT_MISMATCH
        
        ConsoleReporter(args.format, timing=args.timing).emit(result)
        return status
    
    def cmd_schur(self, args: argparse.Namespace) -> Tuple[PolyResult, int]:
        """Flagged Schur polynomial by the chosen method."""
        shape = parse_partition(args.shape)
        inputs = {'shape': str(shape), 'method': args.method}
        if args.method == 'lgv':
            if args.h is None:
                raise DomainError("--method lgv needs --h")
            inputs['h'] = str(args.h)
            return _poly_result('schur', inputs, h_flagged_via_lgv(shape, args.h)), EXIT_OK
        
        if args.vars is not None:
            if args.method != 'tableaux':
                raise DomainError("--vars is computed from tableaux only")
            inputs['vars'] = str(args.vars)
            return _poly_result('schur', inputs, schur_polynomial(shape, args.vars)), EXIT_OK
        if args.h is not None:
            inputs['h'] = str(args.h)
            if args.method == 'tableaux':
                return _poly_result('schur', inputs, h_flagged_schur(shape, args.h)), EXIT_OK
            flag = Flag.h_flag(len(shape), args.h)
        else:
            flag = parse_flag(args.flags)
            inputs['flags'] = str(flag)
        compute = flagged_schur if args.method == 'tableaux' else jacobi_trudi
        return _poly_result('schur', inputs, compute(shape, flag)), EXIT_OK
    
    def cmd_schubert(self, args: argparse.Namespace) -> Tuple[PolyResult, int]:
        """Schubert polynomial with optional specializations."""
        w = parse_permutation(args.perm)
        poly = schubert_poly(w, args.strategy)
        extra: Dict[str, Any] = {}
        if args.at_ones:
            extra['value_at_ones'] = poly.value_at_ones()
        if args.principal:
            extra['principal'] = str(principal_specialization(poly)).replace('x1', 'q')
        if args.word:
            extra['reduced_word'] = str(reduced_word(w, args.strategy))
        inputs = {'perm': str(w), 'strategy': args.strategy}
        return _poly_result('schubert', inputs, poly, **extra), EXIT_OK
    
    def _verify_params(self, args: argparse.Namespace) -> Dict[str, Any]:
        identity = args.identity
        params: Dict[str, Any] = {}
        if identity in ('jacobi-trudi', 'lgv', 'flagged-det', 'flagged-det-staircase'):
            if args.max_shape is not None:
                params['max_shape'] = parse_partition(args.max_shape)
            if args.shape is not None:
                params['shape'] = parse_partition(args.shape)
        if identity == 'jacobi-trudi':
            if args.max_flag is not None:
                params['max_flag'] = args.max_flag
            if args.flags is not None:
                params['flag'] = parse_flag(args.flags)
        elif identity == 'lgv':
            if args.h is not None:
                params['hs'] = (args.h,)
            elif args.h_max is not None:
                params['hs'] = tuple(range(1, args.h_max + 1))
            params['variant'] = Variant(args.variant)
            params['trace'] = args.trace
        elif identity in ('flagged-det', 'flagged-det-staircase'):
            if args.h is not None:
                params['h'] = args.h
            if args.h_max is not None:
                params['h_max'] = args.h_max
            params['show_matrix'] = args.show_matrix
        else:
            if args.n is not None:
                params['n'] = args.n
            if identity in ('mainschubert', 'catalan-hankel'):
                h_max = args.h_max if args.h_max is not None else args.h
                if h_max is not None:
                    params['h_max'] = h_max
        return params
    
    def cmd_verify(self, args: argparse.Namespace):
        """Run one identity sweep."""
        params = self._verify_params(args)
        verifier = IdentityVerifier(budget_override=args.budget_override)
        report = verifier.run(args.identity, **params)
        if args.save:
            get_database(args.db).save_verification_report(report)
        return report, EXIT_OK if report.passed else EXIT_MISMATCH
    
    def cmd_search(self, args: argparse.Namespace):
        """Exhaustive maximizer search, compared with the published table."""
        report = MaxSearch(args.threads, args.budget_override).run(args.n, args.keep_values)
        table = load_published_table(config.published_table_path)
        report.discrepancies = compare_with_published(report, table)
        if args.save:
            get_database(args.db).save_search_report(report)
        return report, EXIT_OK
    
    def cmd_catalan(self, args: argparse.Namespace):
        """Table of Catalan numbers and Catalan-Hankel determinants."""
        return catalan_table(args.n_max, args.h_max), EXIT_OK
    
    def cmd_history(self, args: argparse.Namespace):
        """Stored runs, newest first."""
        return get_database(args.db).history(args.kind, args.limit), EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    return SchurkitCLI().run(argv)


if __name__ == '__main__':
    sys.exit(main())
