"""Wall-clock budgets for long verification sweeps."""

import time
from typing import Optional
from threading import Lock

from src.errors import BudgetExceededError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Budget:
    """Wall-clock budget shared by the cases of one sweep."""
    
    def __init__(self, seconds: Optional[float] = None):
        """
        Initialize budget.
        
        Args:
            seconds: Allowed wall-clock time; None or a non-positive value
                disables the cap
        """
        self.seconds = seconds if seconds and seconds > 0 else None
        self.started = time.monotonic()
        self.checks = 0
        self.lock = Lock()
        self.logger = logger
    
    def elapsed(self) -> float:
        """Seconds since the budget was created."""
        return time.monotonic() - self.started
    
    def elapsed_ms(self) -> int:
        """Milliseconds since the budget was created."""
        return int(self.elapsed() * 1000)
    
    def check(self, label: str = 'sweep') -> None:
        """
        Raise if the budget is spent.
        
        Args:
            label: Name of the sweep, used in the error message
            
        Raises:
            BudgetExceededError: If more than ``seconds`` have elapsed
        """
        with self.lock:
            self.checks += 1
            if self.seconds is None:
                return
            elapsed = self.elapsed()
            if elapsed > self.seconds:
                self.logger.warning(
                    f"Budget exhausted for {label}",
                    extra={'elapsed_s': round(elapsed, 3), 'budget_s': self.seconds,
                           'checks': self.checks}
                )
                raise BudgetExceededError(
                    f"{label} exceeded its budget of {self.seconds:g}s "
                    f"after {self.checks} cases"
                )
    
    def remaining(self) -> Optional[float]:
        """Seconds left, or None when uncapped."""
        if self.seconds is None:
            return None
        return max(0.0, self.seconds - self.elapsed())
