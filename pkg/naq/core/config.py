"""
Configuration management for NAQ sessions
"""
import copy
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from naq.core.errors import ConfigError
from naq.identities.catalogue import CATALOGUE, STAR_CHECKS

logger = logging.getLogger(__name__)


class Config:
    """Configuration manager for a NAQ session file"""

    DEFAULT_CONFIG = {
        "session": {
            "dimension": 2,
            "truncation_order": 2,
            "corpus_seed": 0,
            "certificate_degree_override": None,  # Sweep this per-slot degree instead
            "backstop_samples": 0,  # Random high-degree tuples per holds verdict
            "lemma2": False,  # Run the nilpotency cross-check
            "lemma2_corpus_size": 50,
        },
        "bivector": {
            "kind": "symplectic",
        },
        "product": {
            "kind": "moyal",  # moyal, flexible, custom
            "file": None,  # Corrections file for custom products
            "corrections": None,  # Inline corrections for custom products
            "gauge": None,  # Optional gauge layers D_1..D_k
        },
        "checks": ["associative"],
        "engine": {
            "threads": 1,  # 0 = one per CPU; NAQ_THREADS overrides
        },
    }

    def __init__(self):
        """Initialize configuration with default values"""
        self.data = copy.deepcopy(self.DEFAULT_CONFIG)
        self.source = None

    def load_from_file(self, file_path):
        """Load configuration from specified JSON file"""
        with open(file_path, 'r', encoding='utf-8') as f:
            loaded_config = json.load(f)
        if not isinstance(loaded_config, dict):
            raise ConfigError(f"{file_path} must contain a JSON object")
        # Update configuration, preserving default values for missing keys
        self._recursive_update(self.data, loaded_config)
        self.source = Path(file_path)
        logger.info(f"Loaded configuration from {file_path}")

    def save_as(self, file_path):
        """Save current configuration to a specified file"""
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(self.data, f, indent=4)

    def get(self, section, key=None, default=None):
        """Get configuration value(s) with optional default value

        Args:
            section: Configuration section name
            key: Configuration key name (if None, returns entire section)
            default: Default value to return if section or key not found

        Returns:
            Configuration value or default if not found
        """
        if key is None:
            return self.data.get(section, default if default is not None else {})
        return self.data.get(section, {}).get(key, default)

    def set(self, section, key, value):
        """Set configuration value"""
        if section not in self.data:
            self.data[section] = {}
        self.data[section][key] = value

    def _recursive_update(self, d, u):
        """Recursively update nested dictionaries"""
        for k, v in u.items():
            if isinstance(v, dict) and k in d and isinstance(d[k], dict):
                self._recursive_update(d[k], v)
            else:
                d[k] = v


def _integer(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class SessionConfig:
    """Validated, immutable view of a session configuration"""
    dimension: int
    truncation_order: int
    bivector: dict
    product: str
    checks: tuple
    product_file: Path | None = None
    corrections: list | None = None
    gauge: list | None = None
    certificate_degree_override: int | None = None
    corpus_seed: int = 0
    backstop_samples: int = 0
    lemma2: bool = False
    lemma2_corpus_size: int = 50
    threads: int = 1
    echo: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_config(cls, config):
        """Validate a Config into a SessionConfig

        Raises:
            ConfigError: on any missing or out-of-range setting
        """
        session = config.get("session")
        dimension = _integer(session.get("dimension"), "session.dimension", 1)
        truncation_order = _integer(session.get("truncation_order"), "session.truncation_order", 1)

        bivector = config.get("bivector")
        if not isinstance(bivector, dict) or "kind" not in bivector:
            raise ConfigError("bivector section needs a kind")

        product = config.get("product")
        kind = str(product.get("kind", "")).lower()
        if kind not in ("moyal", "flexible", "custom"):
            raise ConfigError(f"Unknown product kind: {product.get('kind')!r}")
        product_file = product.get("file")
        if product_file is not None:
            product_file = Path(product_file)
            if not product_file.is_absolute() and config.source is not None:
                product_file = config.source.parent / product_file
        corrections = product.get("corrections")
        if kind == "custom" and product_file is None and corrections is None:
            raise ConfigError("custom product needs a corrections file or inline corrections")

        checks = config.data.get("checks", [])
        if checks == "all":
            checks = list(STAR_CHECKS)
        if isinstance(checks, str) or not isinstance(checks, list):
            raise ConfigError(f"checks must be a list of identity names or 'all', got {checks!r}")
        if not all(isinstance(name, str) for name in checks):
            raise ConfigError(f"check names must be strings, got {checks!r}")
        unknown = [name for name in checks if name not in CATALOGUE]
        if unknown:
            raise ConfigError(f"unknown checks {unknown}; known: {', '.join(CATALOGUE)}")

        override = session.get("certificate_degree_override")
        if override is not None:
            override = _integer(override, "session.certificate_degree_override", 0)

        return cls(
            dimension=dimension,
            truncation_order=truncation_order,
            bivector=copy.deepcopy(bivector),
            product=kind,
            checks=tuple(checks),
            product_file=product_file,
            corrections=copy.deepcopy(corrections),
            gauge=copy.deepcopy(product.get("gauge")),
            certificate_degree_override=override,
            corpus_seed=_integer(session.get("corpus_seed", 0), "session.corpus_seed"),
            backstop_samples=_integer(session.get("backstop_samples", 0),
                                      "session.backstop_samples", 0),
            lemma2=bool(session.get("lemma2", False)),
            lemma2_corpus_size=_integer(session.get("lemma2_corpus_size", 50),
                                        "session.lemma2_corpus_size", 1),
            threads=_integer(config.get("engine", "threads", 1), "engine.threads", 0),
            echo=copy.deepcopy(config.data),
        )

    @classmethod
    def load(cls, file_path):
        """Read a JSON session file over the defaults and validate it"""
        config = Config()
        config.load_from_file(file_path)
        return cls.from_config(config)
