"""Settings for verification runs.

Configuration is a flat dictionary of dotted keys. YAML files may nest
them; ``load_config`` flattens the nesting.

    groebner.spair_budget   S-pair reductions allowed per Buchberger run
    lattice.rank_clause     ``at_least_n`` or ``exact_n``
    checks.seed             seed for linear extensions and sampled graphs
    checks.samples          sampled cases per n for the graph checks
    checks.jobs             worker threads for independent checks
    cache.cache_bases       cache reduced bases in a dogpile region
    cache.dogpile.*         region configuration for ``configure_from_config``

``PLUCKER_ASL_SPAIR_BUDGET`` overrides ``groebner.spair_budget``.
"""

import os
from hashlib import sha1
from threading import Lock
from typing import Mapping, Optional

import attr
import structlog
import yaml
from cachetools import TTLCache
from dogpile.cache import CacheRegion, make_region

from plucker_asl.caching import refreshing_cached
from plucker_asl.exceptions import ConfigError
from plucker_asl.groebner import DEFAULT_SPAIR_BUDGET
from plucker_asl.lattice import RankClause

SLOG = structlog.get_logger(__name__)

ENV_SPAIR_BUDGET = "PLUCKER_ASL_SPAIR_BUDGET"
DEFAULT_SEED = 20240229

DEFAULTS = {
    "groebner.spair_budget": DEFAULT_SPAIR_BUDGET,
    "lattice.rank_clause": RankClause.AT_LEAST_N.value,
    "checks.seed": DEFAULT_SEED,
    "checks.samples": 10000,
    "checks.jobs": 1,
    "cache.cache_bases": False,
}

#: Settings keyed by a hash of their configuration, refreshed on access.
_SETTINGS_CACHE = TTLCache(maxsize=64, ttl=600)
_SETTINGS_CACHE_LOCK = Lock()


def flatten(mapping: Mapping, prefix: str = "") -> dict:
    flat = {}
    for key, value in mapping.items():
        dotted = f"{prefix}{key}"
        if isinstance(value, Mapping):
            flat.update(flatten(value, dotted + "."))
        else:
            flat[dotted] = value
    return flat


def load_config(path: str) -> dict:
    """Read a YAML configuration file into dotted keys."""
    with open(path, encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path} must contain a mapping, not {type(data).__name__}")
    return flatten(data)


def resolve_config(config: Optional[Mapping] = None, environ: Optional[Mapping] = None) -> dict:
    """Defaults, then ``config``, then the environment."""
    environ = os.environ if environ is None else environ
    resolved = dict(DEFAULTS)
    resolved.update(config or {})
    if environ.get(ENV_SPAIR_BUDGET):
        resolved["groebner.spair_budget"] = environ[ENV_SPAIR_BUDGET]
    return resolved


def make_settings_key(config, *args, **kwargs):
    """Hash a configuration dict into a cache key."""
    return sha1(str(sorted(config.items(), key=lambda kv: kv[0])).encode("utf-8")).hexdigest()


@attr.s(frozen=True)
class Settings:
    key: str = attr.ib()
    spair_budget: int = attr.ib()
    rank_clause: RankClause = attr.ib()
    seed: int = attr.ib()
    samples: int = attr.ib()
    jobs: int = attr.ib()
    basis_region: Optional[CacheRegion] = attr.ib(default=None, eq=False, repr=False)

    @property
    def cache_bases(self) -> bool:
        return self.basis_region is not None


def _positive_int(config: Mapping, key: str) -> int:
    value = config.get(key, DEFAULTS.get(key))
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if number < 1:
        raise ConfigError(f"{key} must be positive, got {number}")
    return number


def _flag(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)


@refreshing_cached(cache=_SETTINGS_CACHE, key=make_settings_key, lock=_SETTINGS_CACHE_LOCK)
def get_settings(config: dict) -> Settings:
    """Get (potentially cached) settings for a configuration dict.

    Args:
        config (dict): Dotted keys; missing keys take their defaults

    Raises:
        ConfigError: a value has the wrong type, or basis caching is on
            without a ``cache.dogpile.backend``

    Returns:
        Settings: A cached Settings object
    """
    key = make_settings_key(config)
    merged = dict(DEFAULTS)
    merged.update(config)

    try:
        rank_clause = RankClause(merged["lattice.rank_clause"])
    except ValueError:
        raise ConfigError(
            f"lattice.rank_clause must be one of {[c.value for c in RankClause]}"
        ) from None

    basis_region = None
    if _flag(merged.get("cache.cache_bases")):
        if "cache.dogpile.backend" not in merged:
            raise ConfigError("cache.cache_bases needs cache.dogpile.backend")
        basis_region = make_region()
        basis_region.configure_from_config(merged, "cache.dogpile.")

    settings = Settings(
        key=key,
        spair_budget=_positive_int(merged, "groebner.spair_budget"),
        rank_clause=rank_clause,
        seed=_positive_int(merged, "checks.seed"),
        samples=_positive_int(merged, "checks.samples"),
        jobs=_positive_int(merged, "checks.jobs"),
        basis_region=basis_region,
    )
    SLOG.debug("settings.loaded", key=key, cache_bases=settings.cache_bases)
    return settings
