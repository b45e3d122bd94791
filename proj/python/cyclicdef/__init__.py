"""Cyclic subgroup counts, Delta = |G| - |C(G)|, and small-group censuses."""

from ._core import (
    CatalogError,
    ClosureCapExceeded,
    DeltaReport,
    Group,
    InvalidSpec,
    bundled_catalog_text,
    build,
    census,
    delta,
    delta_report,
    i2,
    is_isomorphic,
    load_catalog,
    oracle_count,
    order_census,
    parse_catalog,
    validate_catalog,
    verify,
)

__all__ = [
    "CatalogError",
    "ClosureCapExceeded",
    "DeltaReport",
    "Group",
    "InvalidSpec",
    "bundled_catalog_text",
    "build",
    "census",
    "delta",
    "delta_report",
    "i2",
    "is_isomorphic",
    "load_catalog",
    "oracle_count",
    "order_census",
    "parse_catalog",
    "validate_catalog",
    "verify",
]
