"""
Configuration for ArcMax

Default tolerances, iteration budgets and verification settings. Values can be
overridden from a YAML or JSON file passed to the CLI with --config.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from loguru import logger

from arcmax.QUADRATURE.models import QuadratureConfig

# Default configuration values
DEFAULT_CONFIG: Dict[str, Any] = {
    # Quadrature used for arc lengths and the Leibniz integral
    "QUADRATURE_REL_TOL": 1e-10,
    "QUADRATURE_ABS_TOL": 1e-12,
    "QUADRATURE_MAX_DEPTH": 50,

    # Tighter quadrature for oracles that are finite-differenced or maximized
    "ORACLE_REL_TOL": 1e-13,
    "ORACLE_ABS_TOL": 1e-15,

    # Root finding
    "ROOT_TOL": 1e-12,
    "ROOT_MAX_ITER": 200,

    # Verification suite
    "VERIFY_SEED": 20240611,
    "VERIFY_RANDOM_PAIRS": 10,
    "VERIFY_SYMMETRY_SAMPLES": 1000,

    # trajectory family plotted by `trajectory --family`, degrees
    "FAMILY_DEGREES": [30.0, 45.0, 56.47, 75.0, 90.0],

    "LOG_LEVEL": "WARNING",
}


class ArcMaxConfig:
    """Configuration manager for the ArcMax numerics and CLI"""

    def __init__(self, config_file: Optional[Path] = None):
        self.config = DEFAULT_CONFIG.copy()

        if config_file is not None:
            self._load_from_file(Path(config_file))

    def _load_from_file(self, config_file: Path):
        """Load configuration from a YAML or JSON file"""
        with open(config_file, "r") as f:
            if config_file.suffix.lower() == ".json":
                file_config = json.load(f)
            else:
                file_config = yaml.safe_load(f) or {}

        for key, value in file_config.items():
            if key not in self.config:
                logger.warning(f"Ignoring unknown config key {key!r} in {config_file}")
                continue
            self.config[key] = value

        logger.info(f"Loaded configuration from {config_file}")

    def get(self, key: str, default=None):
        """Get configuration value"""
        return self.config.get(key, default)

    def quadrature_config(self) -> QuadratureConfig:
        return QuadratureConfig(
            rel_tol=self.get("QUADRATURE_REL_TOL"),
            abs_tol=self.get("QUADRATURE_ABS_TOL"),
            max_depth=self.get("QUADRATURE_MAX_DEPTH"),
        )

    def oracle_quadrature_config(self) -> QuadratureConfig:
        return QuadratureConfig(
            rel_tol=self.get("ORACLE_REL_TOL"),
            abs_tol=self.get("ORACLE_ABS_TOL"),
            max_depth=self.get("QUADRATURE_MAX_DEPTH"),
        )

    def get_summary(self) -> str:
        """Get configuration summary for logging"""
        return f"""
ArcMax Configuration:
  Quadrature: rel_tol={self.get("QUADRATURE_REL_TOL")}, abs_tol={self.get("QUADRATURE_ABS_TOL")}, max_depth={self.get("QUADRATURE_MAX_DEPTH")}
  Oracle quadrature: rel_tol={self.get("ORACLE_REL_TOL")}, abs_tol={self.get("ORACLE_ABS_TOL")}
  Root finding: tol={self.get("ROOT_TOL")}, max_iter={self.get("ROOT_MAX_ITER")}
  Verification: seed={self.get("VERIFY_SEED")}, random pairs={self.get("VERIFY_RANDOM_PAIRS")}
  Trajectory family (deg): {', '.join(str(d) for d in self.get("FAMILY_DEGREES", []))}
        """.strip()
