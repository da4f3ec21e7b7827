"""Lattice-like operation kinds and translation signs."""

from enum import Enum


class OpKind(str, Enum):
    """
    meet_K: x ⊓_K y = P_{x-K} y      join_K: x ⊔_K y = P_{x+K} y
    meet_L: x ⊓_L y = P_{x-L} y      join_L: x ⊔_L y = P_{x+L} y
    with L the dual of K.
    """

    MEET_K = "meet_K"
    JOIN_K = "join_K"
    MEET_L = "meet_L"
    JOIN_L = "join_L"


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"
