import sys

from controllers.base import EXIT_FAILURE, EXIT_OK, add_common_arguments, maps_errors, output_path
from dep_container import get_logger, get_selftest, get_settings, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import CheckRow
from models.errors import UsageError

COMMAND = "selftest"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Run the oracle and identity suites.",
        description="Checks the solved series against enumeration, closed forms, recursion identities, "
                    "ring consistency and Burnside integrality.")
    parser.add_argument("--max-m", dest="max_m", type=int, help="Largest enumerated half-perimeter (default 12).")
    add_common_arguments(parser)
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    limit = get_settings().enumeration_max_m
    if config.max_m > limit:
        raise UsageError(f"--max-m {config.max_m} exceeds ENUMERATION_MAX_M={limit}")
    results = get_selftest().run(config.max_m)
    rows = [CheckRow(check=r.check, status="pass" if r.passed else "fail", detail=r.detail) for r in results]
    path = get_table_repository().write_rows(output_path(config), rows, CheckRow)
    failed = [r.check for r in results if not r.passed]
    log_dict = {"max_m": config.max_m, "failed": failed, "path": str(path)}
    if failed:
        logger.error(f"Self test failed {log_dict}")
        print(f"failed checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILURE
    logger.info(f"Self test passed {log_dict}")
    return EXIT_OK
