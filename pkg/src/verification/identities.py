"""Identity sweeps: every identity is checked by computing both sides independently."""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from src.config import config
from src.errors import BudgetExceededError, DomainError, IdentityMismatchError
from src.lattice import (
    Variant,
    certify_entries,
    format_path,
    h_flagged_via_lgv,
    lengthened_endpoints,
    lgv_determinant,
    nc_path_systems,
    printed_matrix,
    z_nc,
)
from src.perms import (
    code_flag,
    is_dominant,
    is_vexillary,
    permutations,
    shift,
    vexillary_shape_and_flag,
    w0,
)
from src.polyring import LaurentPoly
from src.reports.models import Counterexample, VerificationReport
from src.schubert import mainschubert_determinant, schubert_poly
from src.search import catalan_hankel, woo_sides
from src.shapes import Flag, Partition, staircase, subdiagrams
from src.tableaux import flagged_schur, h_flagged_schur, jacobi_trudi
from src.utils.budget import Budget
from src.utils.logger import get_logger

logger = get_logger(__name__)

Value = Union[LaurentPoly, int]

IDENTITIES = (
    'jacobi-trudi', 'lgv', 'flagged-det', 'flagged-det-staircase',
    'wachs', 'mainschubert', 'woo', 'catalan-hankel',
)


@dataclass
class Case:
    """One instance of an identity: labelled routes that must agree."""
    label: Dict[str, str]
    sides: List[Tuple[str, Value]] = field(default_factory=list)
    details: List[str] = field(default_factory=list)
    skipped: bool = False

    def mismatch(self) -> Optional[Counterexample]:
        if not self.sides:
            return None
        first_label, first = self.sides[0]
        for label, value in self.sides[1:]:
            if value != first:
                return Counterexample(case=self.label, left_label=first_label, left=str(first),
                                      right_label=label, right=str(value))
        return None


def _param_text(value: Any) -> str:
    return str(value.value) if isinstance(value, Enum) else str(value)


def _nonempty_subdiagrams(shape: Partition) -> List[Partition]:
    return [mu for mu in subdiagrams(shape) if not mu.is_empty()]


def _check_schubert_size(n: int, what: str) -> None:
    if n > config.schubert_max_n:
        raise BudgetExceededError(
            f"{what} needs Schubert polynomials in S_{n}, beyond S_{config.schubert_max_n}"
        )


class IdentityVerifier:
    """Runs identity sweeps under a wall-clock budget."""
    
    def __init__(self, budget_seconds: Optional[float] = None, budget_override: bool = False):
        """
        Initialize the verifier.
        
        Args:
            budget_seconds: Wall-clock cap per sweep; defaults to config.budget_secs
            budget_override: Allow sweeps beyond the default size limits
        """
        self.budget_seconds = config.budget_secs if budget_seconds is None else budget_seconds
        self.budget_override = budget_override
        self.logger = logger
        self._sweeps: Dict[str, Callable[..., Iterator[Case]]] = {
            'jacobi-trudi': self.jacobi_trudi_cases,
            'lgv': self.lgv_cases,
            'flagged-det': self.flagged_det_cases,
            'flagged-det-staircase': self.flagged_det_staircase_cases,
            'wachs': self.wachs_cases,
            'mainschubert': self.mainschubert_cases,
            'woo': self.woo_cases,
            'catalan-hankel': self.catalan_hankel_cases,
        }
    
    def run(self, identity: str, **params: Any) -> VerificationReport:
        """
        Check every case of an identity, stopping at the first mismatch.
        
        Args:
            identity: One of IDENTITIES
            **params: Sweep parameters (see the ``*_cases`` methods)
            
        Returns:
            VerificationReport; ``passed`` is False with a counterexample on mismatch
            
        Raises:
            DomainError: For an unknown identity or invalid parameters
            BudgetExceededError: If the sweep runs out of time or size budget
        """
        if identity not in self._sweeps:
            raise DomainError(f"Unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
        if params.get('n') is not None and params['n'] < 1:
            raise DomainError(f"{identity} needs n >= 1, got {params['n']}")
        budget = Budget(self.budget_seconds)
        report = VerificationReport(
            identity=identity,
            params={k: _param_text(v) for k, v in params.items() if v is not None}
        )
        self.logger.info(f"Verifying {identity}", extra={'params': report.params})
        
        for case in self._sweeps[identity](**params):
            budget.check(identity)
            report.details.extend(case.details)
            if case.skipped:
                report.skipped += 1
                continue
            report.cases += 1
            counterexample = case.mismatch()
            if counterexample is not None:
                report.passed = False
                report.counterexample = counterexample
                self.logger.error(
                    f"Identity {identity} failed",
                    extra={'case': counterexample.case,
                           'left': counterexample.left, 'right': counterexample.right}
                )
                break
            self.logger.debug(f"{identity} ok", extra={'case': case.label})
        
        report.elapsed_ms = budget.elapsed_ms()
        self.logger.info(
            f"Finished {identity}: {'pass' if report.passed else 'FAIL'}",
            extra={'cases': report.cases, 'skipped': report.skipped,
                   'elapsed_ms': report.elapsed_ms}
        )
        return report
    
    # Tableaux
    def jacobi_trudi_cases(self, max_shape: Partition = Partition((4, 4, 4)), max_flag: int = 6,
                           shape: Optional[Partition] = None,
                           flag: Optional[Flag] = None) -> Iterator[Case]:
        """Tableau enumeration against the flagged Jacobi-Trudi determinant."""
        if shape is not None:
            flag = flag or Flag.constant(len(shape), max_flag)
            pairs = [(shape, flag)]
        else:
            pairs = (
                (mu, Flag(bounds))
                for mu in subdiagrams(max_shape)
                for bounds in combinations_with_replacement(range(1, max_flag + 1), len(mu))
            )
        for mu, b in pairs:
            yield Case(
                label={'shape': str(mu), 'flag': str(b)},
                sides=[('tableaux', flagged_schur(mu, b)), ('jacobi-trudi', jacobi_trudi(mu, b))],
            )
    
    # Lattice paths
    def lgv_cases(self, max_shape: Partition = Partition((3, 2, 2)), hs: Sequence[int] = (2, 3),
                  shape: Optional[Partition] = None, variant: Variant = Variant.PLAIN,
                  trace: bool = False) -> Iterator[Case]:
        """Brute-force noncrossing families against the LGV determinant."""
        shapes = [shape] if shape is not None else _nonempty_subdiagrams(max_shape)
        for mu in shapes:
            for h in hs:
                grid, starts, ends = lengthened_endpoints(mu, h, variant)
                label = {'shape': str(mu), 'h': str(h), 'variant': Variant(variant).value}
                if grid.size > config.nc_max_points:
                    if shape is not None:
                        raise DomainError(
                            f"Grid of {grid.diagram} has {grid.size} points; the exhaustive "
                            f"check is limited to {config.nc_max_points}"
                        )
                    yield Case(label=label, skipped=True)
                    continue
                details = []
                if trace:
                    details.append(f"{mu} h={h}: starts {' '.join(map(str, starts))}, "
                                   f"ends {' '.join(map(str, ends))}")
                    for k, system in enumerate(nc_path_systems(grid, starts, ends), start=1):
                        for index, path in enumerate(system.paths, start=1):
                            details.append(f"  system {k} path {index}: {format_path(path)}")
                yield Case(
                    label=label,
                    sides=[('noncrossing sum', z_nc(grid, starts, ends)),
                           ('determinant', lgv_determinant(grid, starts, ends))],
                    details=details,
                )
    
    def _flagged_cases(self, variant: Variant, max_shape: Partition, h_max: int,
                       shape: Optional[Partition], h: Optional[int],
                       show_matrix: bool) -> Iterator[Case]:
        shapes = [shape] if shape is not None else _nonempty_subdiagrams(max_shape)
        hs = [h] if h is not None else range(1, h_max + 1)
        for mu in shapes:
            for k in hs:
                label = {'shape': str(mu), 'h': str(k), 'variant': variant.value}
                try:
                    entries = certify_entries(mu, k, variant)
                except IdentityMismatchError as e:
                    yield Case(label=label, sides=[('determinant entry', e.left),
                                                   ('1-flagged form', e.right)])
                    return
                details = []
                if show_matrix:
                    matrix = printed_matrix(mu, k, variant)
                    for i in range(1, k + 1):
                        for j in range(1, k + 1):
                            details.append(f"({i},{j}) {entries[i - 1][j - 1]} = {matrix[i - 1, j - 1]}")
                result = h_flagged_via_lgv(mu, k, variant)
                sides = [
                    (f'lgv {variant.value}', result),
                    ('tableaux', h_flagged_schur(mu, k)),
                    ('jacobi-trudi', jacobi_trudi(mu, Flag.h_flag(len(mu), k))),
                ]
                if variant is Variant.STAIRCASE and result.max_variable() > k + len(mu):
                    sides = [('highest variable', result.max_variable()),
                             ('allowed', k + len(mu))]
                yield Case(label=label, sides=sides, details=details)
    
    def flagged_det_cases(self, max_shape: Partition = Partition((4, 3, 2)), h_max: int = 3,
                          shape: Optional[Partition] = None, h: Optional[int] = None,
                          show_matrix: bool = False) -> Iterator[Case]:
        """h-flagged Schur polynomials through the plain path lengthening."""
        return self._flagged_cases(Variant.PLAIN, max_shape, h_max, shape, h, show_matrix)
    
    def flagged_det_staircase_cases(self, max_shape: Partition = Partition((4, 3, 2)),
                                    h_max: int = 3, shape: Optional[Partition] = None,
                                    h: Optional[int] = None,
                                    show_matrix: bool = False) -> Iterator[Case]:
        """The staircase lengthening; extra variables must cancel."""
        return self._flagged_cases(Variant.STAIRCASE, max_shape, h_max, shape, h, show_matrix)
    
    # Schubert polynomials
    def wachs_cases(self, n: Optional[int] = None) -> Iterator[Case]:
        """Schubert polynomial of each vexillary w in S_n against its flagged Schur polynomial."""
        n = config.wachs_max_n if n is None else n
        if n > config.wachs_max_n and not self.budget_override:
            raise BudgetExceededError(
                f"Wachs sweep over S_{n} exceeds the limit n <= {config.wachs_max_n}; "
                f"pass --budget-override"
            )
        _check_schubert_size(n, "Wachs sweep")
        for w in permutations(n):
            if not is_vexillary(w):
                continue
            shape, flag = vexillary_shape_and_flag(w)
            schubert = schubert_poly(w)
            flagged = flagged_schur(shape, flag)
            sides = [('schubert', schubert), ('flagged schur', flagged)]
            alternative = code_flag(w)
            if alternative != flag:
                sides.append((f'flagged schur, code flag {alternative}', flagged_schur(shape, alternative)))
            yield Case(
                label={'w': str(w), 'shape': str(shape), 'flag': str(flag)},
                sides=sides,
            )
    
    def mainschubert_cases(self, n: int = 4, h_max: int = 2) -> Iterator[Case]:
        """Determinant of shifted extensions against the Schubert polynomial of 1^h x w."""
        _check_schubert_size(n + 2 * h_max - 1, "mainschubert sweep")
        for w in permutations(n):
            if not is_dominant(w):
                continue
            for h in range(1, h_max + 1):
                label = {'w': str(w), 'h': str(h)}
                try:
                    determinant_side = mainschubert_determinant(w, h)
                except IdentityMismatchError as e:
                    yield Case(label=label, sides=[('schubert entry', e.left),
                                                   ('path count', e.right)])
                    return
                yield Case(
                    label=label,
                    sides=[('determinant', determinant_side),
                           ('schubert', schubert_poly(shift(w, h)))],
                )
    
    # Catalan numbers
    def woo_cases(self, n: int = 6) -> Iterator[Case]:
        """Principal specialization of 1 x w_0(k) for k = 1..n."""
        for k in range(1, n + 1):
            left, right = woo_sides(k)
            yield Case(
                label={'n': str(k)},
                sides=[('schubert at q^(i-1)', left), ('q^binom(n,3) Cat_q(n)', right)],
            )
    
    def catalan_hankel_cases(self, n: int = 5, h_max: int = 3) -> Iterator[Case]:
        """Schubert value of 1^h x w_0(k) at all-ones against the Catalan-Hankel determinant."""
        _check_schubert_size(n + h_max, "Catalan-Hankel sweep")
        for k in range(1, n + 1):
            for h in range(1, h_max + 1):
                yield Case(
                    label={'n': str(k), 'h': str(h)},
                    sides=[
                        ('schubert at ones', schubert_poly(shift(w0(k), h)).value_at_ones()),
                        ('flagged schur at ones', h_flagged_schur(staircase(k), h).value_at_ones()),
                        ('hankel determinant', catalan_hankel(k, h)),
                    ],
                )


def verify(identity: str, budget_override: bool = False, **params: Any) -> VerificationReport:
    return IdentityVerifier(budget_override=budget_override).run(identity, **params)
