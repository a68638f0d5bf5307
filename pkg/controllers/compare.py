from pathlib import Path

import mpmath as mp

from controllers.base import EXIT_OK, add_class_argument, add_common_arguments, maps_errors, output_path
from dep_container import get_logger, get_moment_lab, get_table_repository
from dtos.run_config import RunConfig
from dtos.tables import ExtrapolationRow, MomentReportRow
from models.moments import REPORT_DIGITS
from models.numbers import approx, format_rational, rad_approx

COMMAND = "compare"


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        COMMAND,
        help="Convergence of normalized moments toward the limit law.",
        description="Normalized moments of a class at each index in --m (half- or quarter-perimeter "
                    "following the class convention), their deviation from the limit, a heuristic "
                    "m^(-1/2) extrapolation and one plot file per moment order.")
    add_class_argument(parser, required=True)
    add_common_arguments(parser, "m", "k", "digits")
    parser.set_defaults(handler=handle)


def sibling_path(path: Path, suffix: str, extension: str) -> Path:
    return path.with_name(f"{path.stem}_{suffix}{extension}")


@maps_errors
def handle(config: RunConfig) -> int:
    logger = get_logger()
    lab = get_moment_lab()
    repository = get_table_repository()
    name = config.symmetry_class.value
    digits = config.digits
    path = output_path(config)

    report_rows, extrapolation_rows = [], []
    for k in config.k:
        report = lab.convergence_report(config.symmetry_class, k, config.m)
        for row in report.rows:
            report_rows.append(MomentReportRow(
                symmetry_class=name, k=k, m=row.index,
                factorial_moment=format_rational(row.factorial_moment),
                power_moment=format_rational(row.power_moment),
                normalized=approx(row.normalized.to_mpf, digits),
                limit=rad_approx(report.limit, digits),
                rel_dev=approx(lambda: row.rel_dev, digits),
                digits=digits,
                normalized_exact=row.normalized.render(),
                limit_exact=report.limit.render()))
        repository.write_plot(
            sibling_path(path, f"{name}_k{k}", ".dat"),
            ((row.index, approx(row.normalized.to_mpf, digits)) for row in report.rows))
        if len(report.rows) >= 3:
            fit = lab.extrapolate_report(report)
            with mp.workdps(REPORT_DIGITS):
                rel_dev = fit.estimate / report.limit.to_mpf() - 1
            extrapolation_rows.append(ExtrapolationRow(
                symmetry_class=name, k=k, estimate=approx(lambda: fit.estimate, digits),
                limit=rad_approx(report.limit, digits), rel_dev=approx(lambda: rel_dev, digits),
                digits=digits, model=fit.model, heuristic=report.heuristic_extrapolation))
        else:
            log_dict = {"class": name, "k": k, "points": len(report.rows)}
            logger.warning(f"Too few points for extrapolation {log_dict}")

    repository.write_rows(path, report_rows, MomentReportRow)
    repository.write_rows(sibling_path(path, "extrapolation", ".csv"), extrapolation_rows, ExtrapolationRow)
    log_dict = {"class": name, "k": config.k, "m": config.m, "path": str(path)}
    logger.info(f"Comparison written {log_dict}")
    return EXIT_OK
