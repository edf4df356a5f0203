#!/usr/bin/env python3
"""
Formatting functions for zbasis.
Contains format_text, format_json and format_csv for computed bases and bench rows.
"""
import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence

from .parser import IdealSource, format_ideal_source, format_polynomial
from .polynomial import Polynomial, sort_descending

CSV_COLUMNS = ["name", "strategy", "ring", "wall_ms", "basis_size", "max_coeff_bits", "verified"]


def basis_source(source: IdealSource, basis: Sequence[Polynomial]) -> IdealSource:
    """The computed basis as a printable source named S, in canonical order."""
    return source.with_generators(sort_descending(basis), ideal_name="S")


def format_text(source: IdealSource, basis: Sequence[Polynomial]) -> str:
    """Basis as an ideal file that check can read back."""
    return format_ideal_source(basis_source(source, basis))


def format_json(source: IdealSource, basis: Sequence[Polynomial], stats: Optional[Dict[str, Any]] = None,
                extra: Optional[Dict[str, Any]] = None) -> str:
    res: Dict[str, Any] = {
        "name": source.name,
        "ring": source.ring.describe(),
        "variables": list(source.variables),
        "ordering": source.ordering.name,
        "basis": [format_polynomial(p, source.variables) for p in sort_descending(basis)],
    }
    if stats is not None:
        res["stats"] = stats
    if extra:
        res.update(extra)
    return json.dumps(res, indent=2)


def format_csv(rows: List[Dict[str, Any]], header: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    if header:
        writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
