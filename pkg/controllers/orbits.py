from fractions import Fraction

import mpmath as mp

from controllers.base import EXIT_OK, add_common_arguments, add_subgroup_argument, maps_errors, output_path
from dep_container import get_logger, get_orbit_counter, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import OrbitJetRow, OrbitRow, RatioRow
from models.numbers import approx, format_rational
from models.rings import JetRing, LaurentRing

COMMAND = "orbits"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Orbit counts under a subgroup, or ratio rows with --alpha.",
        description="Burnside averages of the fixed-point series over --subgroup. With --alpha the "
                    "command emits m^alpha r_m / p_m for m in --m (default 2..N).")
    add_subgroup_argument(parser, required=True)
    add_common_arguments(parser, "order", "mode", "jet", "m", "alpha", "digits")
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    counter = get_orbit_counter()
    repository = get_table_repository()
    name = config.subgroup.value
    if config.alpha is not None:
        m_values = config.m or list(range(2, config.order + 1))
        rows = []
        for m, ratio in counter.subexp_ratio_table(config.subgroup, config.alpha, m_values):
            rows.append(RatioRow(subgroup=name, alpha=format_rational(config.alpha), m=m,
                                 ratio_num=ratio.numerator, ratio_den=ratio.denominator,
                                 ratio_decimal=approx(lambda: _mpf(ratio), config.digits),
                                 digits=config.digits))
        path = repository.write_rows(output_path(config, f"{name}_ratio"), rows, RatioRow)
    elif config.mode == "exact":
        series = counter.orbit_series(config.subgroup, config.order, LaurentRing())
        rows = [OrbitRow(subgroup=name, m=m, n=n, orbit_count=format_rational(c))
                for m in range(series.order + 1) for n, c in series[m].items()]
        path = repository.write_rows(output_path(config), rows, OrbitRow)
    else:
        series = counter.orbit_series(config.subgroup, config.order, JetRing(config.jet))
        rows = [OrbitJetRow(subgroup=name, m=m, k=k, jet_coefficient=format_rational(c))
                for m in range(series.order + 1) if not series[m].is_zero
                for k, c in enumerate(series[m].coefficients)]
        path = repository.write_rows(output_path(config), rows, OrbitJetRow)
    log_dict = {"subgroup": name, "order": config.order, "path": str(path)}
    logger.info(f"Orbit table written {log_dict}")
    return EXIT_OK


def _mpf(value: Fraction):
    return mp.mpf(value.numerator) / value.denominator
