"""Sleep staging from video-derived activity and vital signs.

The package covers the full pipeline: synthetic study generation, contact
vital-sign estimation, optical-flow actigraphy, per-epoch feature
extraction, a dual-window deep feature extractor, random-forest
classification and a cross-validated evaluation harness.
"""

__version__ = "0.1.0"

# Version string embedded in every file format this package writes
# (configs, manifests, weights, forests, reports).
FORMAT_VERSION = "1"

from somnoflow.backend import backend_name  # noqa: E402,F401
from somnoflow.core import (  # noqa: E402,F401
    Hypnogram,
    Recording,
    SleepStage,
    StageScheme,
    VitalSeries,
    map_hypnogram,
    map_stage,
)
