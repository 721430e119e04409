"""Token-based detection of exact and inconsistent (gapped) code clones."""

from .config import DetectorConfig, PipelineConfig, SearchParams
from .kernels import BACKEND_NAME

__version__ = "0.1.0"

__all__ = ["DetectorConfig", "PipelineConfig", "SearchParams", "BACKEND_NAME", "__version__"]
