"""Dense integer coding of text symbols.

Symbols are mapped to ``1..sigma`` in their natural sort order; code ``0`` is
reserved for the terminal sentinel, which therefore compares smaller than
every real symbol.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import InvalidInputError

SENTINEL = 0
SENTINEL_GLYPH = "$"


def _symbols(seq) -> list:
    if isinstance(seq, (bytes, bytearray, memoryview)):
        return list(bytes(seq))
    return list(seq)


class Alphabet:
    """Sorted symbol set with encode/decode to dense codes."""

    def __init__(self, symbols: Iterable[Hashable]):
        self.symbols = tuple(sorted(set(symbols)))
        self._code = {s: k + 1 for k, s in enumerate(self.symbols)}

    @classmethod
    def of(cls, *texts) -> "Alphabet":
        syms: set = set()
        for t in texts:
            syms.update(_symbols(t))
        return cls(syms)

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    @property
    def size(self) -> int:
        """Number of codes including the sentinel."""
        return len(self.symbols) + 1

    def __contains__(self, sym) -> bool:
        return sym in self._code

    def encode(self, seq, sentinel: bool = False) -> np.ndarray:
        """Codes for ``seq``; raises for symbols outside the alphabet."""
        syms = _symbols(seq)
        try:
            codes = [self._code[s] for s in syms]
        except KeyError as exc:
            raise InvalidInputError(f"symbol {exc.args[0]!r} not in alphabet") from None
        if sentinel:
            codes.append(SENTINEL)
        return np.asarray(codes, dtype=np.int32)

    def encode_pattern(self, seq) -> tuple[int, ...] | None:
        """Codes for a query pattern, or ``None`` if some symbol never occurs."""
        out = []
        for s in _symbols(seq):
            c = self._code.get(s)
            if c is None:
                return None
            out.append(c)
        return tuple(out)

    def decode(self, codes: Sequence[int]) -> str:
        out = []
        for c in codes:
            c = int(c)
            if c == SENTINEL:
                out.append(SENTINEL_GLYPH)
                continue
            s = self.symbols[c - 1]
            out.append(s if isinstance(s, str) else chr(s) if isinstance(s, int) else str(s))
        return "".join(out)
