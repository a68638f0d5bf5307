from controllers.base import EXIT_OK, add_class_argument, add_common_arguments, maps_errors, output_path
from dep_container import get_enumerator, get_logger, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import CountRow

COMMAND = "enumerate"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Count staircase polygons by brute force.",
        description="Counts all staircase polygons with half-perimeter up to --order, by class and area.")
    add_class_argument(parser)
    add_common_arguments(parser, "order")
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    table = get_enumerator().enumerate_counts(config.order)
    wanted = config.symmetry_class.value if config.symmetry_class else None
    rows = [CountRow(symmetry_class=name, m=m, n=n, count=count)
            for name, m, n, count in table.rows() if wanted in (None, name)]
    path = get_table_repository().write_rows(output_path(config), rows, CountRow)
    log_dict = {"path": str(path), "rows": len(rows)}
    logger.info(f"Counts written {log_dict}")
    return EXIT_OK
