"""Order Properties read models."""

from .property_read_models import PropertyReportReadModel

__all__ = ["PropertyReportReadModel"]
