from .hyp2f1 import hyp2f1_24_72, hyp2f1_24_72_series, hyp2f1_24_72_transformed
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureError,
    QuadResult,
    integrate,
)
from .roots import RootFindingError, find_root

__all__ = [
    "DEFAULT_CONFIG",
    "QuadratureConfig",
    "QuadratureError",
    "QuadResult",
    "RootFindingError",
    "find_root",
    "hyp2f1_24_72",
    "hyp2f1_24_72_series",
    "hyp2f1_24_72_transformed",
    "integrate",
]
