"""Settings submodule for enrichqa."""

from .manager import load_settings
from .models import PRESETS, InterrogativeEntry, InterrogativeTable, PipelineSettings

__all__ = ["PRESETS", "InterrogativeEntry", "InterrogativeTable", "PipelineSettings", "load_settings"]
