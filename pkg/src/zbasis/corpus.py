#!/usr/bin/env python3
"""Embedded benchmark ideals for zbasis."""
from pathlib import Path
from typing import Any, Dict, List, Optional

from .parser import IdealSource, parse_ideal_file

DATA_DIR = Path(__file__).parent / "data"
CORPUS_PREFIX = "corpus:"
FAMILIES = ("worked", "A", "B", "finite")


class UnknownCorpusEntry(KeyError):
    def __str__(self) -> str:
        return f"unknown corpus entry '{self.args[0]}'; run 'zbasis corpus' to list them"


def _random_entry(name: str, family: str, all_ms: int, just_ms: int) -> Dict[str, Any]:
    favourable = "all" if family == "A" else "just"
    return {
        "file": f"{name}.ideal",
        "family": family,
        "favourable": favourable,
        "description": f"random ideal in ZZ[x,y,z], {favourable.upper()} is faster",
        "reference_ms": {"all": all_ms, "just": just_ms},
    }


# Reference timings are published wall times in milliseconds; reported, never asserted.
CORPUS_REGISTRY: Dict[str, Dict[str, Any]] = {
    "ex33": {
        "file": "ex33.ideal",
        "family": "worked",
        "favourable": None,
        "description": "three generators over ZZ[x,y]; the ideal contains 7",
        "reference_ms": None,
    },
    "ex42": {
        "file": "ex42.ideal",
        "family": "worked",
        "favourable": None,
        "description": "local ordering ds; Mora reduction needs gcd-augmentation",
        "reference_ms": None,
    },
    "ex70": {
        "file": "ex70.ideal",
        "family": "worked",
        "favourable": None,
        "description": "seventy generators over ZZ[x,y,z]; 2129600 lies in the ideal",
        "reference_ms": None,
    },
    "A1": _random_entry("A1", "A", 6630, 251481340),
    "A2": _random_entry("A2", "A", 40, 63740),
    "A3": _random_entry("A3", "A", 51570, 6134060),
    "A4": _random_entry("A4", "A", 4400, 522340),
    "A5": _random_entry("A5", "A", 250, 19080),
    "A6": _random_entry("A6", "A", 4110, 271460),
    "A7": _random_entry("A7", "A", 56720, 2676080),
    "A8": _random_entry("A8", "A", 190, 8340),
    "A9": _random_entry("A9", "A", 1131470, 39694950),
    "A10": _random_entry("A10", "A", 110, 3020),
    "B1": _random_entry("B1", "B", 1696700, 730),
    "B2": _random_entry("B2", "B", 252950, 450),
    "B3": _random_entry("B3", "B", 4090, 30),
    "B4": _random_entry("B4", "B", 35160, 500),
    "B5": _random_entry("B5", "B", 3690, 110),
    "B1_mod_2e100": {
        "file": "B1_mod_2e100.ideal",
        "family": "finite",
        "favourable": "all",
        "description": "B1 over ZZ/2^100",
        "reference_ms": None,
    },
    "B1_mod_10e200": {
        "file": "B1_mod_10e200.ideal",
        "family": "finite",
        "favourable": "all",
        "description": "B1 over ZZ/10^200",
        "reference_ms": {"all": 8000, "just": None},
    },
    "B1_mod_10e1000": {
        "file": "B1_mod_10e1000.ideal",
        "family": "finite",
        "favourable": "all",
        "description": "B1 over ZZ/10^1000",
        "reference_ms": None,
    },
}


def get_corpus_entry(name: str) -> Dict[str, Any]:
    if name not in CORPUS_REGISTRY:
        raise UnknownCorpusEntry(name)
    return CORPUS_REGISTRY[name]


def list_corpus(family: Optional[str] = None) -> List[str]:
    """Entry names in registry order; family 'all' means A and B together."""
    if family is None:
        return list(CORPUS_REGISTRY)
    wanted = ("A", "B") if family == "all" else (family,)
    return [name for name, entry in CORPUS_REGISTRY.items() if entry["family"] in wanted]


def corpus_text(name: str) -> str:
    entry = get_corpus_entry(name)
    return (DATA_DIR / entry["file"]).read_text(encoding="utf-8")


def load_corpus_source(name: str) -> IdealSource:
    return parse_ideal_file(corpus_text(name), name=name)


def resolve_source(target: str) -> IdealSource:
    """Parse 'corpus:NAME' from the registry or any other argument as a file path."""
    if target.startswith(CORPUS_PREFIX):
        return load_corpus_source(target[len(CORPUS_PREFIX):])
    path = Path(target)
    return parse_ideal_file(path.read_text(encoding="utf-8"), name=path.stem)
