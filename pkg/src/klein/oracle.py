"""Brute-force reference computations for the test suite.

Nothing here touches the Cayley tables or permutation arrays of the core
modules: blade products are worked out by sorting index words one
transposition at a time and contracting equal neighbours with the metric.
Slow on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Multivector
from .duality import DualMultivector

# index words of the basis, in coefficient order; e20 is written 2,0 on purpose
_WORDS = ([], [0], [1], [2], [1, 2], [2, 0], [0, 1], [0, 1, 2])


@dataclass(frozen=True)
class BladeWord:
    indexes: tuple
    sign: float = 1.0

    def canonical(self) -> "BladeWord":
        """Sort indexes with adjacent swaps, flipping the sign per swap.

        Repeated indexes are left in place (the caller contracts them).
        """
        idx = list(self.indexes)
        sign = self.sign
        for end in range(len(idx) - 1, 0, -1):
            for i in range(end):
                if idx[i] > idx[i + 1]:
                    idx[i], idx[i + 1] = idx[i + 1], idx[i]
                    sign = -sign
        return BladeWord(tuple(idx), sign)


def basis_word(k: int) -> BladeWord:
    """Canonical word of basis element ``k`` (e20 becomes ``-(0, 2)``)."""
    return BladeWord(tuple(_WORDS[k])).canonical()


def _word_to_basis(word: BladeWord):
    for k in range(8):
        ref = basis_word(k)
        if ref.indexes == word.indexes:
            return k, word.sign * ref.sign
    raise ValueError(f"not a canonical word: {word}")


def oracle_product(i: BladeWord, j: BladeWord, sigma: Sequence[int]):
    """Geometric product of two words: returns ``(sign, canonical word)``; sign 0 if it vanishes."""
    word = BladeWord(tuple(i.indexes) + tuple(j.indexes), i.sign * j.sign).canonical()
    idx = list(word.indexes)
    sign = word.sign
    out = []
    pos = 0
    while pos < len(idx):
        if pos + 1 < len(idx) and idx[pos] == idx[pos + 1]:
            sign *= sigma[idx[pos]]
            pos += 2
        else:
            out.append(idx[pos])
            pos += 1
    return sign, BladeWord(tuple(out), 1.0)


def oracle_basis_product(i: int, j: int, sigma: Sequence[int]):
    """Product of basis elements by coefficient index: ``(k, sign)``."""
    sign, word = oracle_product(basis_word(i), basis_word(j), sigma)
    k, orient = _word_to_basis(word)
    return k, sign * orient


def oracle_multiply(a: Multivector, b: Multivector, sigma: Sequence[int]) -> Multivector:
    out = [0.0] * 8
    ca, cb = list(a), list(b)
    for i in range(8):
        if ca[i] == 0:
            continue
        for j in range(8):
            if cb[j] == 0:
                continue
            k, sign = oracle_basis_product(i, j, sigma)
            out[k] += sign * ca[i] * cb[j]
    return Multivector(out)


def _parity(seq) -> int:
    inv = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return inv % 2


def oracle_dual(word: BladeWord):
    """Duality on a word by complement-and-reverse; returns ``(sign, canonical model word)``."""
    idx = list(word.indexes)
    sign = word.sign
    comp = [k for k in (0, 1, 2) if k not in idx]
    if _parity(comp + idx):
        if len(comp) >= 2:
            comp[0], comp[1] = comp[1], comp[0]
        else:
            # complement has no freedom left; permute the blade itself instead
            idx[0], idx[1] = idx[1], idx[0]
            sign = -sign
    reversed_comp = BladeWord(tuple(reversed(comp)), sign).canonical()
    return reversed_comp.sign, BladeWord(reversed_comp.indexes, 1.0)


def oracle_dual_basis(k: int):
    """Duality of basis element ``k``: returns ``(target index, sign)`` in the model basis."""
    sign, word = oracle_dual(basis_word(k))
    target, orient = _word_to_basis(word)
    return target, sign * orient


def oracle_dual_multivector(a: Multivector) -> DualMultivector:
    out = [0.0] * 8
    for k, c in enumerate(a):
        target, sign = oracle_dual_basis(k)
        out[target] += sign * c
    return DualMultivector(out)


def oracle_exp(a: Multivector, sigma: Sequence[int], terms: int = 32) -> Multivector:
    """Partial Taylor sum of ``e^A`` with ``terms`` terms."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    total = [1.0] + [0.0] * 7
    term = Multivector([1.0] + [0.0] * 7)
    for n in range(1, terms):
        term = oracle_multiply(term, a, sigma) / n
        total = [t + c for t, c in zip(total, term)]
    return Multivector(total)
