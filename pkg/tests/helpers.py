"""Shared oracles and samplers for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: the reducer scans for cancelling pairs instead of using a stack, the
characteristic polynomial comes from cofactor expansion instead of
Faddeev-LeVerrier, and root locations are planted rather than counted.
"""

from __future__ import annotations

import random

from biorder.exactalg import IntMatrix, Poly
from biorder.freegroup import FreeMap, Word, compose, letter, parse_word


def W(text: str, names: str = "xy") -> Word:
    return parse_word(text, tuple(names))


def naive_reduce(letters) -> tuple:
    """Repeatedly delete the first adjacent cancelling pair (confluent, so
    the result is the unique reduced form)."""
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            if letters[i][0] == letters[i + 1][0] and letters[i][1] == -letters[i + 1][1]:
                del letters[i:i + 2]
                changed = True
                break
    return tuple(letters)


def cofactor_char_poly(m: IntMatrix) -> Poly:
    """det(lambda*I - A) by recursive Laplace expansion over Poly entries."""
    lam = Poly([0, 1])
    entries = [[(lam if i == j else Poly()) - Poly([m.rows[i][j]])
                for j in range(m.dim)] for i in range(m.dim)]
    return _poly_det(entries)


def _poly_det(rows) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Poly()
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def synthetic_division(coeffs_desc, root):
    """Divide by (x - root): returns (quotient descending, remainder)."""
    out = [coeffs_desc[0]]
    for c in coeffs_desc[1:]:
        out.append(c + root * out[-1])
    return out[:-1], out[-1]


# ---------------------------------------------------------------------------
# random structured inputs
# ---------------------------------------------------------------------------

def random_matrix(rng: random.Random, d: int, lo: int = -5, hi: int = 5) -> IntMatrix:
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(d)] for _ in range(d)])


def random_unimodular_matrix(rng: random.Random, d: int, steps: int = 12) -> IntMatrix:
    """Product of elementary row operations, so |det| = 1."""
    a = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(d)
        j = rng.randrange(d)
        if op == 0 and i != j:
            s = rng.choice((1, -1))
            for k in range(d):
                a[i][k] += s * a[j][k]
        elif op == 1 and i != j:
            a[i], a[j] = a[j], a[i]
        elif op == 2:
            a[i] = [-x for x in a[i]]
    return IntMatrix.from_rows(a)


def elementary_automorphisms(rank: int) -> list[FreeMap]:
    """Nielsen moves with explicit inverses: swaps, inversions, shears."""
    gens = [letter(rank, g) for g in range(rank)]
    out = []
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            # swap x_i <-> x_j (self-inverse)
            images = list(gens)
            images[i], images[j] = gens[j], gens[i]
            out.append(FreeMap(rank, tuple(images), tuple(images)))
            for s in (1, -1):
                # shear x_i -> x_i x_j^s, inverse x_i -> x_i x_j^-s
                sheared = list(gens)
                sheared[i] = gens[i] * (gens[j] ** s)
                unsheared = list(gens)
                unsheared[i] = gens[i] * (gens[j] ** -s)
                out.append(FreeMap(rank, tuple(sheared), tuple(unsheared)))
    for i in range(rank):
        flipped = list(gens)
        flipped[i] = gens[i].inverse()
        out.append(FreeMap(rank, tuple(flipped), tuple(flipped)))
    return out


def random_automorphism(rng: random.Random, rank: int, steps: int = 5) -> FreeMap:
    moves = elementary_automorphisms(rank)
    phi = rng.choice(moves)
    for _ in range(steps - 1):
        phi = compose(phi, rng.choice(moves))
    return phi
