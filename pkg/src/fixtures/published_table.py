"""Loading and checking the published table of maximizers."""

from typing import List, Optional

import pandas as pd

from src.config import config
from src.errors import ParseError
from src.perms import parse_permutation
from src.reports.models import SearchReport
from src.utils.logger import get_logger

logger = get_logger(__name__)


class PublishedTableLoader:
    """Parser for the published maximizer CSV (columns n, permutation, value)."""
    
    REQUIRED_COLUMNS = ['n', 'permutation', 'value']
    
    def __init__(self):
        """Initialize the loader."""
        self.logger = logger
    
    def load(self, csv_path: Optional[str] = None) -> Optional[pd.DataFrame]:
        """
        Parse the CSV file and return the validated rows.
        
        Args:
            csv_path: Path to the CSV file; defaults to config.published_table_path
            
        Returns:
            DataFrame with columns n, permutation (canonical text), value, or
            None if the file cannot be read
        """
        csv_path = csv_path or config.published_table_path
        try:
            df = pd.read_csv(csv_path, dtype=str)
            self.logger.debug(f"Loaded published table with {len(df)} rows")
            
            if not self._validate_columns(df):
                return None
            
            return self._validate_data(df)
            
        except FileNotFoundError:
            self.logger.error(f"Published table not found: {csv_path}")
            return None
        except pd.errors.EmptyDataError:
            self.logger.error(f"Published table is empty: {csv_path}")
            return None
    
    def _validate_columns(self, df: pd.DataFrame) -> bool:
        """Validate that required columns exist."""
        missing_columns = [col for col in self.REQUIRED_COLUMNS if col not in df.columns]
        if missing_columns:
            self.logger.error(f"Missing required columns: {missing_columns}")
            return False
        return True
    
    def _validate_data(self, df: pd.DataFrame) -> pd.DataFrame:
        """Keep the rows that validate; skip the rest with a warning."""
        validated_rows = []
        
        for idx, row in df.iterrows():
            try:
                validated_rows.append(self._validate_row(row))
            except (ValueError, ParseError) as e:
                self.logger.warning(f"Skipping row {idx + 1}: {e}")
                continue
        
        if not validated_rows:
            self.logger.warning("No valid rows found after validation")
            return pd.DataFrame(columns=self.REQUIRED_COLUMNS)
        
        return pd.DataFrame(validated_rows)
    
    def _validate_row(self, row: pd.Series) -> dict:
        """Validate a single row."""
        n = int(str(row['n']).strip())
        w = parse_permutation(str(row['permutation']))
        if w.n != n:
            raise ValueError(f"Permutation {w} does not lie in S_{n}")
        value = int(str(row['value']).strip())
        if value < 1:
            raise ValueError(f"Value must be positive: {value}")
        return {'n': n, 'permutation': str(w), 'value': value}


def load_published_table(csv_path: Optional[str] = None) -> pd.DataFrame:
    """Validated published table; empty if the file is missing or unusable."""
    df = PublishedTableLoader().load(csv_path)
    if df is None:
        return pd.DataFrame(columns=PublishedTableLoader.REQUIRED_COLUMNS)
    return df


def compare_with_published(report: SearchReport, table: pd.DataFrame) -> List[str]:
    """
    Differences between a search report and the published rows for its n.
    
    Reports a differing maximum, a published maximizer missing from the
    argmax, and argmax members the table does not list.
    
    Returns:
        Human-readable findings; empty when the report agrees or n is unlisted
    """
    rows = table[table['n'] == report.n] if len(table) else table
    if rows.empty:
        return []
    findings = []
    published_values = sorted(set(int(v) for v in rows['value']))
    if published_values != [report.max_value]:
        findings.append(
            f"S_{report.n}: maximum {report.max_value}, published {published_values}"
        )
    listed = set(rows['permutation'])
    found = set(report.argmax)
    for missing in sorted(listed - found):
        findings.append(f"S_{report.n}: published maximizer {missing} is not in the argmax")
    extra = sorted(found - listed)
    if extra:
        findings.append(f"S_{report.n}: ties not listed in the published table: {', '.join(extra)}")
    for finding in findings:
        logger.warning(finding, extra={'n': report.n})
    return findings
