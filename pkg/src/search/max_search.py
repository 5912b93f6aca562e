"""Exhaustive search for the largest Schubert value at all-ones over S_n."""

import time
from typing import Optional

from src.config import config
from src.perms import is_richardson
from src.reports.models import SearchReport
from src.schubert import all_schubert_values_at_one
from src.utils.logger import get_logger

logger = get_logger(__name__)


class MaxSearch:
    """Finds every permutation of S_n with the largest value at all-ones."""
    
    def __init__(self, threads: Optional[int] = None, budget_override: bool = False):
        """
        Initialize the search.
        
        Args:
            threads: Worker processes for the weak-order traversal
            budget_override: Allow n up to the stretch limit
        """
        self.threads = threads or config.threads
        self.budget_override = budget_override
        self.logger = logger
    
    def run(self, n: int, keep_values: bool = False) -> SearchReport:
        """
        Search S_n.
        
        Every tie for the maximum is kept, sorted by one-line notation.
        
        Args:
            n: Size of the symmetric group
            keep_values: Include every permutation's value in the report
            
        Returns:
            SearchReport with the maximum, the full argmax and the Richardson flag
            
        Raises:
            DomainError: If n < 1
            BudgetExceededError: If n is beyond the configured limits
        """
        started = time.monotonic()
        self.logger.info(f"Searching S_{n}", extra={'n': n, 'threads': self.threads})
        values = all_schubert_values_at_one(n, self.threads, self.budget_override)
        
        max_value = max(values.values())
        argmax = sorted((w for w, v in values.items() if v == max_value), key=lambda w: w.oneline)
        runtime_ms = int((time.monotonic() - started) * 1000)
        report = SearchReport(
            n=n,
            max_value=max_value,
            argmax=[str(w) for w in argmax],
            all_argmax_richardson=all(is_richardson(w) for w in argmax),
            runtime_ms=runtime_ms,
            threads=self.threads,
            values={str(w): values[w] for w in sorted(values, key=lambda w: w.oneline)}
            if keep_values else None,
        )
        self.logger.info(
            f"Search over S_{n} finished",
            extra={'n': n, 'max_value': max_value, 'argmax': report.argmax,
                   'runtime_ms': runtime_ms}
        )
        return report


def max_search(n: int, threads: Optional[int] = None,
               budget_override: bool = False) -> SearchReport:
    return MaxSearch(threads, budget_override).run(n)
