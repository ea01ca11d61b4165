# config_2026/config_loader.py
import os
from dotenv import load_dotenv
import logging

class ConfigLoader2026:
    """Configuration loader for Ritz Bounds Lab 2026"""

    def __init__(self, env_file='.env'):
        self.logger = logging.getLogger(__name__)

        # Environment wins over shell values so a checked-in .env reproduces a run
        if os.path.exists(env_file):
            load_dotenv(env_file, override=True)
            self.logger.info(f"Loaded configuration from {env_file}")
        else:
            self.logger.debug(f"Environment file {env_file} not found, using defaults")

    def get(self, key: str, default=None):
        """Get configuration value"""
        value = os.getenv(key, default)

        # Convert to appropriate type (bool before int: bool is an int subclass)
        if isinstance(default, bool):
            return str(value).lower() in ('true', '1', 'yes', 'on')
        elif isinstance(default, int):
            try:
                return int(value)
            except (ValueError, TypeError):
                self.logger.warning(f"Invalid integer for {key}: {value!r}, using {default}")
                return default
        elif isinstance(default, float):
            try:
                return float(value)
            except (ValueError, TypeError):
                self.logger.warning(f"Invalid float for {key}: {value!r}, using {default}")
                return default

        return value

    def get_all_config(self):
        """Get all configuration as dictionary"""
        return {
            'ATOL': self.get('ATOL', 1e-12),
            'RTOL': self.get('RTOL', 1e-10),
            'HERMITIAN_TOL_FACTOR': self.get('HERMITIAN_TOL_FACTOR', 1e-10),
            'RANK_TOL_FACTOR': self.get('RANK_TOL_FACTOR', 1e-10),
            'EXHAUSTIVE_SEARCH_CAP': self.get('EXHAUSTIVE_SEARCH_CAP', 12),
            'COUNTEREXAMPLE_DIR': self.get('COUNTEREXAMPLE_DIR', 'counterexamples'),
            'FUZZ_TRIALS': self.get('FUZZ_TRIALS', 10000),
            'FUZZ_SEED': self.get('FUZZ_SEED', 42),
            'N_MIN': self.get('N_MIN', 2),
            'N_MAX': self.get('N_MAX', 20),
            'P_RULE': self.get('P_RULE', 0.5),
            'WORKERS': self.get('WORKERS', 1),
            'LOG_LEVEL': self.get('LOG_LEVEL', 'INFO'),
            'LOG_FILE': self.get('LOG_FILE', ''),
        }


def load_config(env_file='.env'):
    """Load configuration - convenience function"""
    return ConfigLoader2026(env_file).get_all_config()
