"""Group-valued invariants of long knots in the full torus.

Diagrams are linear Gauss diagrams (:mod:`tkw.gauss`).  Two invariants are
computed from them: ``phi2`` with values in ``G'' = Z2 * (Z + Z)``
(:mod:`tkw.g2`), decided exactly, and ``phibar`` with values in ``Gbar``
(:mod:`tkw.gbar`), compared by a sound semi-decision procedure.
:mod:`tkw.moves` implements the oriented Reidemeister moves used to test
invariance.
"""

from .g2 import G2Element, IDENTITY, conjugate_equal, inverse, multiply, normalize, phi2, to_ade
from .gauss import (
    Chord,
    ChordClassification,
    ChordRoleViolation,
    ChordType,
    GaussCodeError,
    IndexOutOfRange,
    LinearGaussDiagram,
    MalformedToken,
    Parity,
    PositionParity,
    SignMismatch,
    UnknownChordId,
    classify_chord,
    linked,
    parse_gauss_code,
    position_parity,
    reverse_diagram,
    rotate_basepoint,
    serialize,
)
from .gbar import AbelianImage, GBarVerdict, GBarWord, abelianize, compare, ingest, phibar
from .moves import (
    InvalidSite,
    MoveApplication,
    MoveSchema,
    apply_move,
    enumerate_moves,
    random_diagram,
    random_walk,
)
from .words import Letter, Symbol, letters_phi2, letters_phibar, parse_word, render_word

__version__ = "0.1.0"
