import sys
from functools import wraps
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from dep_container import get_logger, get_table_repository
from dtos.run_config import RunConfig
from models.errors import EngineError, InvariantViolation, UsageError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

CLASS_CHOICES = ["full", "r2", "d1", "d2", "d1d2", "rect", "square"]
SUBGROUP_CHOICES = ["e", "r2", "r", "d1", "d2", "d1d2", "h", "v", "hv", "d4"]


def maps_errors(handler: Callable[[RunConfig], int]) -> Callable[[RunConfig], int]:
    """Translates domain errors raised by a command into exit codes."""

    @wraps(handler)
    def wrapper(config: RunConfig) -> int:
        logger = get_logger()
        try:
            return handler(config)
        except (UsageError, ValidationError) as e:
            log_dict = {"command": config.command}
            logger.error(f"Invalid command arguments {log_dict}")
            print(f"usage error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except InvariantViolation as e:
            log_dict = {"command": config.command, "invariant": e.invariant}
            logger.error(f"Invariant failed {log_dict}")
            print(f"invariant failed: {e}", file=sys.stderr)
            return EXIT_FAILURE
        except EngineError as e:
            log_dict = {"command": config.command, "error": type(e).__name__}
            logger.error(f"Command failed {log_dict}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILURE

    return wrapper


def output_path(config: RunConfig, selector: Optional[str] = None) -> Path:
    if config.out is not None:
        return config.out
    return get_table_repository().default_path(config.command, selector or config.selector)


def add_class_argument(parser, required: bool = False) -> None:
    parser.add_argument("--class", dest="symmetry_class", choices=CLASS_CHOICES, required=required,
                        help="Symmetry class of staircase polygons.")


def add_subgroup_argument(parser, required: bool = False) -> None:
    parser.add_argument("--subgroup", choices=SUBGROUP_CHOICES, required=required,
                        help="Subgroup of the dihedral group of the square.")


def add_common_arguments(parser, *names: str) -> None:
    """Adds the shared flags named in `names`; every command accepts --out."""
    specs = {
        "order": (("--order",), dict(type=int, help="Truncation order N (default 12).")),
        "jet": (("--jet",), dict(type=int, help="Jet order K (default 2).")),
        "m": (("--m",), dict(help="Comma separated perimeter indices, e.g. 64,256,1024.")),
        "k": (("--k",), dict(help="Comma separated moment orders (default 1).")),
        "alpha": (("--alpha",), dict(help="Rational exponent p/q for ratio rows.")),
        "digits": (("--digits",), dict(type=int, help="Significant digits of decimals (default 15).")),
        "mode": (("--mode",), dict(choices=["exact", "jet"], help="Coefficient ring (default exact).")),
    }
    for name in names:
        flags, kwargs = specs[name]
        parser.add_argument(*flags, **kwargs)
    parser.add_argument("--out", type=Path, help="Output file (default OUTPUT_FOLDER/<command>[_<selector>].csv).")
