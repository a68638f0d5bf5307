from controllers.base import EXIT_OK, add_class_argument, add_common_arguments, maps_errors, output_path
from dep_container import get_limit_laws, get_logger, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import ClassLimitRow, LawMomentRow, SequenceRow
from models.numbers import format_rational, rad_approx

COMMAND = "limits"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Exact limit-law moments and recursion sequences.",
        description="Moments k = 0..max(--k) of a limit law (--law) or of a class's scaled limit (--class).")
    parser.add_argument("--law", choices=["airy", "meander", "beta", "dirac", "recursions"])
    add_class_argument(parser)
    add_common_arguments(parser, "k", "digits")
    parser.set_defaults(handler=handle)


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    laws = get_limit_laws()
    repository = get_table_repository()
    digits = config.digits
    if config.symmetry_class is not None:
        rows = []
        for k in range(config.k_max + 1):
            value = laws.class_limit_moment(config.symmetry_class, k)
            rows.append(ClassLimitRow(symmetry_class=config.symmetry_class.value, k=k, exact=value.render(),
                                      decimal=rad_approx(value, digits), digits=digits))
        path = repository.write_rows(output_path(config), rows, ClassLimitRow)
    elif config.law_kind is None:
        rows = [SequenceRow(k=k, phi=format_rational(phi), omega=format_rational(omega),
                            f=format_rational(f), g=g.render(), g_decimal=rad_approx(g, digits), digits=digits)
                for k, phi, omega, f, g in laws.law_sequence_rows(config.k_max)]
        path = repository.write_rows(output_path(config), rows, SequenceRow)
    else:
        rows = []
        for k in range(config.k_max + 1):
            value = laws.law_moment(config.law_kind, k)
            rows.append(LawMomentRow(law=config.law, k=k, exact=value.render(),
                                     decimal=rad_approx(value, digits), digits=digits))
        path = repository.write_rows(output_path(config), rows, LawMomentRow)
    log_dict = {"selector": config.selector, "k_max": config.k_max, "path": str(path)}
    logger.info(f"Limit table written {log_dict}")
    return EXIT_OK
