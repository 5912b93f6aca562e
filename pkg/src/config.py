"""Configuration management for schurkit."""

import os
from pathlib import Path
from typing import Dict, Any
import yaml
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

ENV_PREFIX = "SCHURKIT_"


class Config:
    """Configuration manager that loads from YAML and environment variables."""
    
    def __init__(self, config_path: str = "config/config.yaml"):
        """Initialize configuration from YAML file and environment variables."""
        self.config_path = Path(config_path)
        self._config: Dict[str, Any] = {}
        self._load_config()
    
    def _load_config(self) -> None:
        """Load configuration from YAML file."""
        if self.config_path.exists():
            with open(self.config_path, 'r') as f:
                self._config = yaml.safe_load(f) or {}
        else:
            # Use defaults if config file doesn't exist
            self._config = self._get_defaults()
    
    def _get_defaults(self) -> Dict[str, Any]:
        """Get default configuration values."""
        return {
            'budget_secs': 0,
            'search_max_n': 7,
            'search_stretch_n': 8,
            'wachs_max_n': 6,
            'schubert_max_n': 8,
            'nc_max_points': 40,
            'minors_max_size': 6,
            'threads': 1,
            'level_chunk_size': 64,
            'log_level': 'WARNING',
            'db_path': 'data/schurkit.db',
            'published_table_path': 'data/published_maxima.csv',
        }
    
    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value, checking environment variables first."""
        # SCHURKIT_<KEY>, dots become underscores
        env_key = ENV_PREFIX + key.upper().replace('.', '_')
        env_value = os.getenv(env_key)
        if env_value is not None:
            # Try to convert to appropriate type
            if isinstance(default, bool):
                return env_value.lower() in ('true', '1', 'yes')
            elif isinstance(default, int):
                try:
                    return int(env_value)
                except ValueError:
                    return default
            elif isinstance(default, float):
                try:
                    return float(env_value)
                except ValueError:
                    return default
            elif isinstance(default, list):
                return [item.strip() for item in env_value.split(',')]
            return env_value
        
        # Fall back to YAML config
        keys = key.split('.')
        value = self._config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default
        return value if value is not None else default
    
    @property
    def budget_secs(self) -> float:
        """Wall-clock cap for verify sweeps in seconds (0 disables the cap)."""
        return float(self.get('budget_secs', 0.0))
    
    @property
    def search_max_n(self) -> int:
        """Largest n searched without an override."""
        return self.get('search_max_n', 7)
    
    @property
    def search_stretch_n(self) -> int:
        """Largest n searched with --budget-override."""
        return self.get('search_stretch_n', 8)
    
    @property
    def wachs_max_n(self) -> int:
        """Largest S_n swept by the Wachs check without an override."""
        return self.get('wachs_max_n', 6)
    
    @property
    def schubert_max_n(self) -> int:
        """Hard ceiling for all-permutation Schubert sweeps."""
        return self.get('schubert_max_n', 8)
    
    @property
    def nc_max_points(self) -> int:
        """Largest grid handled by brute-force noncrossing enumeration."""
        return self.get('nc_max_points', 40)
    
    @property
    def minors_max_size(self) -> int:
        """Largest matrix expanded by memoized minors before elimination."""
        return self.get('minors_max_size', 6)
    
    @property
    def threads(self) -> int:
        """Default worker count."""
        return self.get('threads', 1)
    
    @property
    def level_chunk_size(self) -> int:
        """Parents per worker task in the weak-order traversal."""
        return self.get('level_chunk_size', 64)
    
    @property
    def log_level(self) -> str:
        """Logging level name."""
        return self.get('log_level', 'WARNING')
    
    @property
    def db_path(self) -> str:
        """Get database path."""
        return self.get('db_path', 'data/schurkit.db')
    
    @property
    def published_table_path(self) -> str:
        """Path of the published maximizer table."""
        return self.get('published_table_path', 'data/published_maxima.csv')


# Global config instance
config = Config()
