"""Maximum degree of random outerplanar and series-parallel graphs."""

from ._maxdeg import (
    bounds,
    classes,
    constants,
    counts,
    degree_table,
    experiment,
    is_member,
    limit_distribution,
    run_cli,
    sample,
    verify,
)

__all__ = [
    "bounds",
    "classes",
    "constants",
    "counts",
    "degree_table",
    "experiment",
    "is_member",
    "limit_distribution",
    "run_cli",
    "sample",
    "verify",
]
