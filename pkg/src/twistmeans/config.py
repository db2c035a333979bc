"""Default tolerances and run parameters; all overridable via CLI/config file."""

from __future__ import annotations

DEFAULT_SEED = 1234

# Per-suite (and per-row-class) residual tolerances.
TOLERANCES = {
    "eq-1.2": 1e-8,
    "euclid-eigen": 1e-8,
    "cexp23": 1e-12,
    "cexp23-zeros": 1e-10,
    "lemma-2.1": 1e-8,
    "lemma-2.2": 1e-6,
    "lemma-2.2-vanishing": 1e-8,
    "lemma-2.3": 1e-6,
    "lemma-2.3-vanishing": 1e-10,
    "remark-2.5": 1e-10,
    "lemma-3.2": 1e-8,
    "lemma-3.2-vanishing": 1e-8,
    "lemma-3.2-fd": 1e-6,
    "lemma-3.2-commutation": 1e-6,
    "lemma-3.2-invariance": 1e-6,
    "lemma-3.4": 1e-10,
    "lemma-4.4": 1e-8,
    "lemma-4.4-fd": 1e-6,
    "remark-1.2": 1e-8,
    "lambda-reduction": 1e-8,
    "counterexamples": 1e-8,
    "witness": 1e-2,
    "injectivity": 1e-6,
    "support-sufficiency": 1e-7,
    "support-necessity": 1e-3,
    "two-sided": 1e-7,
    "two-sided-witness": 1e-3,
}


def tolerance(key: str, override: float | None = None) -> float:
    if override is not None:
        return float(override)
    return TOLERANCES[key]
