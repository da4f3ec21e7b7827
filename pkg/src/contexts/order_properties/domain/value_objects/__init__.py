"""Order Properties value objects."""

from .property_report import EVIDENCE_NOTE, PropertyKind, PropertyReport, Verdict

__all__ = ["EVIDENCE_NOTE", "PropertyKind", "PropertyReport", "Verdict"]
