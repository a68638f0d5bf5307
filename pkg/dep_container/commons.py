import logging
from functools import lru_cache

from dtos.settings import Settings
from repositories.table_repository import TableRepository
from services.enumerator import Enumerator
from services.feq_engine import SeriesSolver
from services.limit_laws import LimitLaws
from services.moment_lab import MomentLab
from services.orbits import OrbitCounter
from services.selftest import SelfTest


@lru_cache(maxsize=None)
def get_settings() -> Settings:
    return Settings.from_env()


@lru_cache(maxsize=None)
def get_logger():
    logging.basicConfig(
    level=get_settings().log_level.upper(),
    format="%(asctime)s - %(levelname)s - %(message)s"
    )
    return logging.getLogger("polygon_moments")


@lru_cache(maxsize=None)
def get_solver() -> SeriesSolver:
    return SeriesSolver(get_logger(), get_settings().verify_max_order)


@lru_cache(maxsize=None)
def get_enumerator() -> Enumerator:
    return Enumerator(get_settings().enumeration_max_m, get_logger())


@lru_cache(maxsize=None)
def get_limit_laws() -> LimitLaws:
    return LimitLaws(get_settings().max_moment_order, get_logger())


def get_moment_lab() -> MomentLab:
    return MomentLab(get_solver(), get_limit_laws(), get_logger())


def get_orbit_counter() -> OrbitCounter:
    return OrbitCounter(get_solver(), get_logger())


def get_selftest() -> SelfTest:
    return SelfTest(
        get_solver(),
        get_enumerator(),
        get_limit_laws(),
        get_moment_lab(),
        get_orbit_counter(),
        get_logger()
    )


def get_table_repository() -> TableRepository:
    return TableRepository(get_settings().output_folder)


def reset_container() -> None:
    """Drops cached settings and services, e.g. after the environment changed."""
    for factory in (get_settings, get_solver, get_enumerator, get_limit_laws):
        factory.cache_clear()
