"""Small shared builders for tests."""
from __future__ import annotations

from clonefinder.units import Unit, UnitSequence


def symbol_sequence(symbols, file="f", sentinel_positions=()) -> UnitSequence:
    """Wrap a raw symbol list into a UnitSequence (one fake unit per symbol).

    ``sentinel_positions`` are indices after which a sentinel is inserted;
    a final sentinel is always appended.
    """
    seq = UnitSequence()
    breaks = set(sentinel_positions)
    for i, sym in enumerate(symbols):
        seq.append_unit(
            Unit(symbol=sym, file=file, first_line=i + 1, last_line=i + 1,
                 token_span=(i, i + 1))
        )
        if i in breaks:
            seq.append_sentinel()
    seq.append_sentinel()
    return seq
