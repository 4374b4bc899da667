"""Exact computer algebra for quantum Capelli polynomials and their classical limits."""

__version__ = "0.1.0"

from .coeff_field import QT, Q, R, FieldElement, ParamField, specialize  # noqa: E402
from .zpoly import ZPolynomial, evaluate  # noqa: E402
from .construct import (  # noqa: E402
    LabeledPolynomial,
    interpolate_classical,
    interpolate_nonsym,
    interpolate_sym,
    normalized_nonsym,
    normalized_sym,
    recurse_nonsym,
    symmetrize_hecke,
    top_macdonald,
)
from .suite import SuiteConfig, SuiteReport, run_suite  # noqa: E402

__all__ = [
    "__version__",
    "QT", "Q", "R", "FieldElement", "ParamField", "specialize",
    "ZPolynomial", "evaluate",
    "LabeledPolynomial", "interpolate_nonsym", "interpolate_sym", "interpolate_classical",
    "recurse_nonsym", "normalized_nonsym", "normalized_sym", "symmetrize_hecke", "top_macdonald",
    "SuiteConfig", "SuiteReport", "run_suite",
]
