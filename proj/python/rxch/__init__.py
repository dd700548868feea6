from ._core import (
    CapacityResult,
    Edge,
    InfoReport,
    InputDistribution,
    LimitReport,
    MiEstimate,
    MiTarget,
    RateMode,
    ReceptorModel,
    StateInfo,
    builtin,
    capacity_binary,
    capacity_general,
    dt_max,
    estimate_mi_y,
    estimate_mi_z,
    flux,
    limit_rate,
    load_model,
    mi_bruteforce,
    mi_rate_discrete,
    parse_model,
    serialize_model,
    stationary,
)

__all__ = [
    "CapacityResult",
    "Edge",
    "InfoReport",
    "InputDistribution",
    "LimitReport",
    "MiEstimate",
    "MiTarget",
    "RateMode",
    "ReceptorModel",
    "StateInfo",
    "builtin",
    "capacity_binary",
    "capacity_general",
    "dt_max",
    "estimate_mi_y",
    "estimate_mi_z",
    "flux",
    "limit_rate",
    "load_model",
    "mi_bruteforce",
    "mi_rate_discrete",
    "parse_model",
    "serialize_model",
    "stationary",
]
