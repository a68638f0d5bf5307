import argparse
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

from controllers import compare, enumeration, limits, moments, orbits, selftest, series
from controllers.base import EXIT_USAGE
from dep_container import get_logger, get_settings
from dtos.run_config import RunConfig
from middlewares.prometheus_middleware import prometheus_middleware, write_metrics
from models.errors import UsageError

CONTROLLERS = (enumeration, series, moments, limits, orbits, compare, selftest)


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> CliParser:
    parser = CliParser(
        prog="staircase",
        description="Exact enumeration, q-series and area limit laws of staircase polygons "
                    "and their symmetry classes.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for controller in CONTROLLERS:
        controller.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        options = {key: value for key, value in vars(args).items()
                   if key != "handler" and value is not None}
        config = RunConfig(**options)
    except (UsageError, ValidationError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    logger = get_logger()
    logger.info(f"Running command {config.model_dump(exclude_none=True)}")
    status = prometheus_middleware(config.command, args.handler, config)

    metrics_file = get_settings().metrics_file
    if metrics_file:
        write_metrics(metrics_file)
    return status


if __name__ == "__main__":
    sys.exit(main())
