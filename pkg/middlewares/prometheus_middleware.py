from typing import Callable

from prometheus_client import REGISTRY, Counter, Histogram, write_to_textfile

COMMAND_COUNT = Counter('command_count', 'Total number of commands run', ['command'])
COMMAND_LATENCY = Histogram('command_latency_seconds', 'Latency of commands in seconds', ['command'])
SERIES_COEFFICIENTS = Counter('series_coefficients', 'Series coefficients solved', ['ring'])


def prometheus_middleware(command: str, call_next: Callable[..., int], *args) -> int:
    COMMAND_COUNT.labels(command).inc()  # Increment the command count
    with COMMAND_LATENCY.labels(command).time():
        status = call_next(*args)
    return status


def record_series_coefficients(ring: str, count: int) -> None:
    SERIES_COEFFICIENTS.labels(ring).inc(count)


def write_metrics(path: str) -> None:
    write_to_textfile(path, REGISTRY)
