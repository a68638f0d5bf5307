from controllers.base import EXIT_OK, add_class_argument, add_common_arguments, maps_errors, output_path
from dep_container import get_logger, get_moment_lab, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import FactorialMomentRow
from models.numbers import format_rational
from services.moment_lab import power_moments

COMMAND = "moments"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Exact area moments at fixed half-perimeters.",
        description="Factorial and power moments of the area for each half-perimeter in --m.")
    add_class_argument(parser, required=True)
    add_common_arguments(parser, "m", "k", "jet")
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    lab = get_moment_lab()
    name = config.symmetry_class.value
    jet_order = max(config.k_max, config.jet)
    rows = []
    for m in config.m:
        factorials = lab.factorial_moments(config.symmetry_class, m, config.k_max, jet_order)
        powers = power_moments(factorials)
        rows.extend(FactorialMomentRow(symmetry_class=name, m=m, k=k,
                                       factorial_moment=format_rational(factorials[k]),
                                       power_moment=format_rational(powers[k]))
                    for k in config.k)
    path = get_table_repository().write_rows(output_path(config), rows, FactorialMomentRow)
    log_dict = {"class": name, "m": config.m, "k": config.k, "path": str(path)}
    logger.info(f"Moments written {log_dict}")
    return EXIT_OK
