"""Exact bigness/nefness tests for divisor classes on projective bundles
over curves, brute-force section-count oracles, and blow-up certificates."""

from .blowups import (
    BigAnticanonicalCertificate,
    BlownUpSurface,
    BlowupScenario,
    BlowupStep,
    ExtClass,
    blow_up,
    certify_big_anticanonical,
    check_class,
)
from .bundles import (
    Curve,
    HNData,
    SplitBundle,
    frobenius_pullback,
    hn_data,
    instability_certificate,
    min_destabilizing_e,
    symmetric_power_stats,
)
from .sections import (
    GrowthReport,
    H0Interval,
    Verdict,
    growth_classify,
    h0_class_interval,
    h0_interval_curve,
    volume,
)
from .surfaces import (
    NumClass,
    RuledSurface,
    big_test,
    canonical_class,
    intersect,
    nef_test,
    pseff_test,
)

__all__ = [
    "BigAnticanonicalCertificate",
    "BlownUpSurface",
    "BlowupScenario",
    "BlowupStep",
    "Curve",
    "ExtClass",
    "GrowthReport",
    "H0Interval",
    "HNData",
    "NumClass",
    "RuledSurface",
    "SplitBundle",
    "Verdict",
    "big_test",
    "blow_up",
    "canonical_class",
    "certify_big_anticanonical",
    "check_class",
    "frobenius_pullback",
    "growth_classify",
    "h0_class_interval",
    "h0_interval_curve",
    "hn_data",
    "instability_certificate",
    "intersect",
    "min_destabilizing_e",
    "nef_test",
    "pseff_test",
    "symmetric_power_stats",
    "volume",
]
