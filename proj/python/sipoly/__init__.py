"""Exact classification of self-interlacing and Hurwitz-stable polynomials."""

import json as _json

try:
    from ._sipoly import (
        NoExpansionError,
        ParseError,
        Polynomial,
        classify_json,
        cf_json,
        dual,
        generate_si,
        generate_stable,
        isolate_roots,
        minors_json,
        si_kind,
        stability,
        __version__,
    )
except ImportError:  # in-tree builds put the extension next to this package
    from _sipoly import (  # type: ignore[no-redef]
        NoExpansionError,
        ParseError,
        Polynomial,
        classify_json,
        cf_json,
        dual,
        generate_si,
        generate_stable,
        isolate_roots,
        minors_json,
        si_kind,
        stability,
        __version__,
    )


def classify(polynomial: str) -> dict:
    """Full classification report as a dictionary."""
    return _json.loads(classify_json(polynomial))


def minors(polynomial: str) -> dict:
    """Hurwitz minors and the Hankel determinant families."""
    return _json.loads(minors_json(polynomial))


def continued_fraction(polynomial: str) -> dict:
    """Stieltjes ladder coefficients from both computation paths."""
    return _json.loads(cf_json(polynomial))


__all__ = [
    "NoExpansionError",
    "ParseError",
    "Polynomial",
    "classify",
    "classify_json",
    "cf_json",
    "continued_fraction",
    "dual",
    "generate_si",
    "generate_stable",
    "isolate_roots",
    "minors",
    "minors_json",
    "si_kind",
    "stability",
    "__version__",
]
