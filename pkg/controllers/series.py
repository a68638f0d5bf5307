from controllers.base import EXIT_OK, add_class_argument, add_common_arguments, maps_errors, output_path
from dep_container import get_logger, get_solver, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import ExactSeriesRow, JetSeriesRow
from models.numbers import format_rational
from models.rings import JetRing, LaurentRing

COMMAND = "series"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Solve the functional equation of a class.",
        description="Emits the perimeter and area generating function of a class up to x^N.")
    add_class_argument(parser, required=True)
    add_common_arguments(parser, "order", "mode", "jet")
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    name = config.symmetry_class.value
    repository = get_table_repository()
    if config.mode == "exact":
        series = get_solver().solve_series(config.symmetry_class, config.order, LaurentRing())
        rows = [ExactSeriesRow(symmetry_class=name, m=m, n=n, coefficient=c)
                for m in range(series.order + 1) for n, c in series[m].items()]
        path = repository.write_rows(output_path(config), rows, ExactSeriesRow)
    else:
        series = get_solver().solve_series(config.symmetry_class, config.order, JetRing(config.jet))
        rows = [JetSeriesRow(symmetry_class=name, m=m, k=k, jet_coefficient=format_rational(c))
                for m in range(series.order + 1) if not series[m].is_zero
                for k, c in enumerate(series[m].coefficients)]
        path = repository.write_rows(output_path(config), rows, JetSeriesRow)
    log_dict = {"class": name, "order": config.order, "mode": config.mode, "path": str(path)}
    logger.info(f"Series written {log_dict}")
    return EXIT_OK
