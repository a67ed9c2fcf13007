"""Caching of reduced Groebner bases.

Bases are cached in process with a TTL cache and, when configured, in a
dogpile.cache region keyed by a mangled text key built from the ideal and
the monomial order.
"""

import functools
import unicodedata
from threading import Lock

import cachetools
import structlog
from cachetools import TTLCache, cached
from dogpile.cache import register_backend
from dogpile.cache.api import NO_VALUE, CacheBackend, NoValue
from dogpile.cache.util import sha1_mangle_key

from plucker_asl.exactalg.orders import MonomialOrder
from plucker_asl.groebner import DEFAULT_SPAIR_BUDGET, GroebnerBasis, Ideal, buchberger

SLOG = structlog.get_logger(__name__)

#: Reduced bases computed in this process, refreshed on every read.
_BASIS_CACHE = TTLCache(maxsize=256, ttl=600)
_BASIS_CACHE_LOCK = Lock()


class DictionaryBackend(CacheBackend):
    """An in-memory dogpile backend for tests and single runs."""

    def __init__(self, arguments):
        self.cache = {}

    def get(self, key):
        return self.cache.get(key, NO_VALUE)

    def set(self, key, value):
        self.cache[key] = value

    def delete(self, key):
        self.cache.pop(key, None)


register_backend("plucker_asl.dictionary", __name__, "DictionaryBackend")


def clean_unicode(value):
    """Convert value into ASCII bytes by brute force."""
    if not isinstance(value, str):
        value = str(value)
    try:
        return value.encode("ascii")
    except UnicodeEncodeError:
        value = unicodedata.normalize("NFKD", value)
        return value.encode("ascii", "ignore")


def mangle_key(key):
    base = "plucker_asl:dogpile"
    return f"{base}:{sha1_mangle_key(clean_unicode(key))}"


def basis_cache_key(
    ideal: Ideal, order: MonomialOrder, spair_budget: int = DEFAULT_SPAIR_BUDGET
) -> str:
    """A key for the reduced basis of ``ideal`` under ``order``.

    Generators are printed and sorted, so the key does not depend on the
    order they were listed in. The S-pair budget is part of the key.
    """
    ambient = ",".join(str(v) for v in sorted(ideal.variables))
    key = " ".join(
        [order.describe(), f"ring=[{ambient}]", f"budget={spair_budget}"]
        + sorted(str(g) for g in ideal.generators)
    )
    return mangle_key(key)


def refreshing_cached(cache, key=cachetools.keys.hashkey, lock=None):
    """Same as `cachetools.cached`,
    but it also refreshes the TTL and checks for expiry on read operations.
    """

    def decorator(func):
        func = cached(cache, key, lock)(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            result = func(*args, **kwargs)
            if lock is not None:
                with lock:
                    cache[key(*args, **kwargs)] = result
                    # cachetools only expires on mutating operations
                    cache.expire()
            return result

        return wrapper

    return decorator


@refreshing_cached(cache=_BASIS_CACHE, key=basis_cache_key, lock=_BASIS_CACHE_LOCK)
def _memory_buchberger(
    ideal: Ideal, order: MonomialOrder, spair_budget: int = DEFAULT_SPAIR_BUDGET
) -> GroebnerBasis:
    return buchberger(ideal, order, spair_budget=spair_budget)


def cached_buchberger(ideal: Ideal, order: MonomialOrder, settings=None) -> GroebnerBasis:
    """Reduced Groebner basis, read through the configured caches.

    Args:
        settings (Settings, optional): Supplies the S-pair budget and, when
            basis caching is on, the dogpile region
    """
    budget = settings.spair_budget if settings is not None else DEFAULT_SPAIR_BUDGET
    region = settings.basis_region if settings is not None else None
    if region is None:
        return _memory_buchberger(ideal, order, spair_budget=budget)

    key = basis_cache_key(ideal, order, spair_budget=budget)
    gb = region.get(key)
    if isinstance(gb, NoValue):
        gb = buchberger(ideal, order, spair_budget=budget)
        region.set(key, gb)
    else:
        SLOG.debug("basis_cache.hit", key=key)
    return gb


def clear_basis_cache():
    with _BASIS_CACHE_LOCK:
        _BASIS_CACHE.clear()
