"""Induced matrix actions on lower-central-series quotients gamma_k / gamma_k+1.

For a free group F_n the degree-k quotient is free abelian with a basis given
by standard bracketings of Lyndon words of length k.  A free-group endomorphism
acts on the quotient by an integer matrix whose column j holds the coordinates
of the image of the j-th basis bracket; for k = 1 this is the abelianization
matrix, for k = 2 the action on basic commutators [x_i, x_j], i < j.

Coordinates are read off the Magnus expansion: a word in gamma_k expands as
1 + (homogeneous degree-k Lie element) + higher terms, and the Lyndon-to-
monomial change of basis is unitriangular in lexicographic order, so
leading-monomial elimination recovers integer coordinates exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import IntMatrix
from .freegroup import (FreeMap, NotAnAutomorphismError, Word, abelianized,
                        apply_map, commutator, letter, verify_automorphism)
from .magnus import Monomial, expand

DEFAULT_DEGREE_CAP = 4


def witt_number(n: int, k: int) -> int:
    """Rank of the degree-k quotient: (1/k) sum_{d|k} mu(d) n^(k/d)."""
    total = 0
    for d in range(1, k + 1):
        if k % d:
            continue
        total += _mobius(d) * n ** (k // d)
    assert total % k == 0
    return total // k


def _mobius(n: int) -> int:
    mu = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


def lyndon_words(n: int, k: int) -> list[tuple[int, ...]]:
    """All Lyndon words of length exactly k over {0..n-1}, in lex order (Duval)."""
    out = []
    w = [0]
    while w:
        if len(w) == k:
            out.append(tuple(w))
        w = [w[i % len(w)] for i in range(k)]
        while w and w[-1] == n - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def _is_lyndon(t: tuple[int, ...]) -> bool:
    return all(t < t[i:] + t[:i] for i in range(1, len(t)))


def standard_bracketing(lw: tuple[int, ...], rank: int) -> Word:
    """Nested commutator word of a Lyndon word: split at the longest proper
    Lyndon suffix and bracket the two halves recursively."""
    if len(lw) == 1:
        return letter(rank, lw[0])
    for i in range(1, len(lw)):
        if _is_lyndon(lw[i:]):
            u, v = lw[:i], lw[i:]
            return commutator(standard_bracketing(u, rank), standard_bracketing(v, rank))
    raise AssertionError("every Lyndon word of length >= 2 has a proper Lyndon suffix")


@dataclass(frozen=True)
class BasisElement:
    lyndon: tuple[int, ...]     # the Lyndon word, also the leading monomial
    bracket: Word               # its standard bracketing in the free group

    def name(self, generator_names) -> str:
        return _bracket_name(self.lyndon, generator_names)


def _bracket_name(lw: tuple[int, ...], names) -> str:
    names = list(names)
    if len(lw) == 1:
        return names[lw[0]]
    for i in range(1, len(lw)):
        if _is_lyndon(lw[i:]):
            return f"[{_bracket_name(lw[:i], names)},{_bracket_name(lw[i:], names)}]"
    raise AssertionError


@dataclass(frozen=True)
class LyndonBasis:
    rank: int
    degree: int
    elements: tuple[BasisElement, ...]

    def __len__(self):
        return len(self.elements)


def lyndon_basis(n: int, k: int, cap: int = DEFAULT_DEGREE_CAP) -> LyndonBasis:
    """Basis of gamma_k / gamma_k+1 for F_n; element count is the Witt number."""
    if not 1 <= k <= cap:
        raise ValueError(f"degree {k} outside 1..{cap}")
    elements = tuple(BasisElement(lw, standard_bracketing(lw, n))
                     for lw in lyndon_words(n, k))
    assert len(elements) == witt_number(n, k)
    return LyndonBasis(n, k, elements)


@dataclass(frozen=True)
class QuotientAction:
    """Matrix of an endomorphism on a degree-k quotient; columns are images."""

    degree: int
    basis: LyndonBasis
    matrix: IntMatrix


def abelianization_matrix(phi: FreeMap) -> IntMatrix:
    """Column j = exponent-sum vector of the image of generator j."""
    return abelianized(phi)


def _lie_coordinates(part: dict[Monomial, int], basis: LyndonBasis,
                     basis_parts: list[dict[Monomial, int]]) -> list[int]:
    """Coordinates of a degree-k Lie element in the Lyndon basis.

    The expansion of the bracketing of a Lyndon word l is l plus lex-greater
    monomials, so eliminating in increasing lex order is exact; a nonzero
    remainder would mean the input was not a Lie element with integer
    coordinates and is an internal error.
    """
    residue = dict(part)
    coords = []
    for element, bpart in zip(basis.elements, basis_parts):
        c = residue.get(element.lyndon, 0)
        coords.append(c)
        if c:
            for m, v in bpart.items():
                nv = residue.get(m, 0) - c * v
                if nv:
                    residue[m] = nv
                elif m in residue:
                    del residue[m]
    assert not residue, "degree-k part is not an integral Lie element"
    return coords


def lcs_action(phi: FreeMap, k: int, cap: int = DEFAULT_DEGREE_CAP) -> QuotientAction:
    """Action induced by phi on gamma_k / gamma_k+1 in the Lyndon basis.

    Requires phi to pass verify_automorphism at NECESSARY-ONLY or better.
    """
    report = verify_automorphism(phi)
    if not report.is_automorphism_candidate:
        raise NotAnAutomorphismError(report.detail)
    basis = lyndon_basis(phi.rank, k, cap)
    if k == 1:
        return QuotientAction(1, basis, abelianization_matrix(phi))
    basis_parts = [expand(e.bracket, k).homogeneous_part(k) for e in basis.elements]
    columns = []
    for element in basis.elements:
        image = apply_map(phi, element.bracket)
        s = expand(image, k)
        for m in s.coeffs:
            if 0 < len(m) < k:
                raise AssertionError(
                    "image of a basis bracket has a nonzero part below degree k")
        columns.append(_lie_coordinates(s.homogeneous_part(k), basis, basis_parts))
    d = len(basis)
    matrix = IntMatrix.from_rows([[columns[j][i] for j in range(d)] for i in range(d)])
    return QuotientAction(k, basis, matrix)
