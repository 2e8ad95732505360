"""Frames of upsets, nuclei, spectra and binary-tree certificates."""

from ._alexandroff import *  # noqa: F401,F403
from ._alexandroff import (
    Error,
    ParseError,
    RelationError,
    PreconditionError,
    GuardExceeded,
    NotDistributive,
    PresentationError,
    InternalError,
)


def frame_of(poset):
    """The frame of upsets of `poset`."""
    return UpsetFrame.build(poset)  # noqa: F405


def nucleus_count(poset):
    return len(enumerate_nuclei(frame_of(poset).lattice()))  # noqa: F405
