"""Bi-orderability decision procedures for groups presented as Z x| F_n.

A knot record carries the monodromy map phi (the t-conjugation on the fiber
free group).  The analyzer computes the induced integer matrix at each level
(level 0 = abelianization, level 1 = action on basic commutators), factors the
characteristic polynomial over Q, counts positive real roots exactly, and
combines the following rules, checked in the order R1, R2, R4, R3, R5:

  R1  fibered and char(M) has no positive real root      -> NOT_BIORDERABLE
  R2  char(M) has no rational root and some irreducible
      factor of char(M) has no positive real root        -> NOT_BIORDERABLE
  R4  fibered and all roots of char(M) positive and real -> BIORDERABLE
  R3  some irreducible factor of char(N) at level 1 has
      no positive real root                              -> NOT_BIORDERABLE
  R5  otherwise                                          -> NO_OBSTRUCTION_FOUND

Premise flags for every rule are recorded even when the rule does not fire.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (FactorReport, IntMatrix, Poly, char_poly, factor_over_Q,
                       has_positive_real_root, all_roots_positive_real,
                       rational_roots)
from .freegroup import (FreeMap, NotAnAutomorphismError, verify_automorphism)
from .lcs import DEFAULT_DEGREE_CAP, QuotientAction, lcs_action

NOT_BIORDERABLE = "NOT_BIORDERABLE"
BIORDERABLE = "BIORDERABLE"
NO_OBSTRUCTION_FOUND = "NO_OBSTRUCTION_FOUND"


class InconsistentPremisesError(RuntimeError):
    """Mutually exclusive rule premises fired; the input falsifies the theory."""


class AnalysisError(ValueError):
    """The analysis cannot proceed (degree cap exceeded, bad level, ...)."""


JUSTIFICATIONS = {
    "R1": ("fibered necessity criterion: a fibered knot with bi-orderable group "
           "has an Alexander polynomial with at least one positive real root, "
           "and char(M) has none"),
    "R2": ("level-0 block obstruction: char(M) has no rational root, so any two "
           "elements outside the commutator subgroup are comparable and the "
           "induced order descends to the abelianized semidirect product; that "
           "group is bi-orderable only if every irreducible block of M has a "
           "positive real eigenvalue, and some block has none"),
    "R3": ("level-1 block obstruction: the action induced on the rank of basic "
           "commutators has an irreducible rational block without a positive "
           "real eigenvalue, whose primary subspace contains nonzero rational "
           "vectors; the infinitesimal-subgroup argument turns this into a "
           "contradiction with any bi-order"),
    "R4": ("fibered sufficiency criterion: all roots of the Alexander polynomial "
           "are real and positive, so the knot group is bi-orderable"),
}


@dataclass(frozen=True)
class KnotRecord:
    """A knot group Z x| F_n: name, monodromy phi, and fiberedness flag."""

    name: str
    phi: FreeMap
    fibered: bool
    generator_names: tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if not self.generator_names:
            object.__setattr__(self, "generator_names",
                               tuple("abcdefghijklmnopqrstuvwxyz"[: self.phi.rank]))
        if len(self.generator_names) != self.phi.rank:
            raise ValueError("need one generator name per generator")

    @property
    def rank(self) -> int:
        return self.phi.rank


@dataclass(frozen=True)
class LevelReport:
    """Everything computed about one quotient level."""

    level: int                       # 0 = abelianization, 1 = basic commutators, ...
    action: QuotientAction
    char_poly: Poly
    factors: FactorReport
    has_rational_root: bool
    all_factors_have_positive_root: bool
    some_factor_all_lambda: bool


@dataclass(frozen=True)
class Verdict:
    outcome: str
    level: int | None
    rule: str | None
    justification: str


@dataclass(frozen=True)
class AnalysisReport:
    record: KnotRecord
    levels: tuple[LevelReport, ...]
    premises: dict[str, bool | None]
    verdict: Verdict


# ---------------------------------------------------------------------------
# matrix-level classification (Z x| Z^d)
# ---------------------------------------------------------------------------

def classify_zd(a: IntMatrix) -> str:
    """BIORDERABLE iff every irreducible factor of char(A) has a root in (0, oo).

    A must be invertible over Q.
    """
    if a.det() == 0:
        raise NotAnAutomorphismError("matrix is singular over Q")
    report = factor_over_Q(char_poly(a))
    return BIORDERABLE if report.all_factors_have_positive_root else NOT_BIORDERABLE


def necessary_positive_eigenvalue(a: IntMatrix) -> bool:
    """Necessary condition: A has at least one positive real eigenvalue."""
    return has_positive_real_root(char_poly(a))


def lambda_block_obstruction(a: IntMatrix) -> bool:
    """True iff some irreducible block of A has no positive real eigenvalue.

    Equivalent to the primary subspace of the no-positive-root factors
    containing a nonzero rational vector, since primary components along
    irreducible factors are rational subspaces.
    """
    return factor_over_Q(char_poly(a)).some_factor_all_lambda


# ---------------------------------------------------------------------------
# knot-level criteria
# ---------------------------------------------------------------------------

def _level0_char_poly(record: KnotRecord) -> Poly:
    return char_poly(lcs_action(record.phi, 1).matrix)


def cr_sufficient(record: KnotRecord) -> Verdict | None:
    """BIORDERABLE when fibered and all Alexander roots are positive real."""
    if record.fibered and all_roots_positive_real(_level0_char_poly(record)):
        return Verdict(BIORDERABLE, 0, "R4", JUSTIFICATIONS["R4"])
    return None


def cr1_necessary(record: KnotRecord) -> Verdict | None:
    """NOT_BIORDERABLE when fibered and no Alexander root is positive real."""
    if record.fibered and not has_positive_real_root(_level0_char_poly(record)):
        return Verdict(NOT_BIORDERABLE, 0, "R1", JUSTIFICATIONS["R1"])
    return None


def level_report(record: KnotRecord, level: int,
                 cap: int = DEFAULT_DEGREE_CAP, max_degree: int = 8) -> LevelReport:
    action = lcs_action(record.phi, level + 1, cap)
    cp = char_poly(action.matrix)
    if cp.degree > max_degree:
        raise AnalysisError(
            f"characteristic polynomial degree {cp.degree} exceeds cap {max_degree}")
    factors = factor_over_Q(cp)
    return LevelReport(
        level=level,
        action=action,
        char_poly=cp,
        factors=factors,
        has_rational_root=bool(rational_roots(cp)),
        all_factors_have_positive_root=factors.all_factors_have_positive_root,
        some_factor_all_lambda=factors.some_factor_all_lambda,
    )


def combine_rules(premises: dict[str, bool | None], max_level: int) -> Verdict:
    """Pure rule combination over premise flags, in the order R1, R2, R4, R3, R5."""
    if premises.get("R1") and premises.get("R4"):
        raise InconsistentPremisesError(
            "R1 (no positive real root) and R4 (all roots positive real) both fired")
    if premises.get("R1"):
        return Verdict(NOT_BIORDERABLE, 0, "R1", JUSTIFICATIONS["R1"])
    if premises.get("R2"):
        return Verdict(NOT_BIORDERABLE, 0, "R2", JUSTIFICATIONS["R2"])
    if premises.get("R4"):
        return Verdict(BIORDERABLE, 0, "R4", JUSTIFICATIONS["R4"])
    if premises.get("R3"):
        return Verdict(NOT_BIORDERABLE, 1, "R3", JUSTIFICATIONS["R3"])
    return Verdict(NO_OBSTRUCTION_FOUND, max_level, None,
                   f"no obstruction found through level {max_level}")


def analyze(record: KnotRecord, max_level: int = 1,
            cap: int = DEFAULT_DEGREE_CAP, max_degree: int = 8) -> AnalysisReport:
    """Full level-by-level analysis with the combined verdict."""
    if not 0 <= max_level <= cap - 1:
        raise AnalysisError(f"max_level must be in 0..{cap - 1}")
    report = verify_automorphism(record.phi)
    if not report.is_automorphism_candidate:
        raise NotAnAutomorphismError(
            f"{record.name}: monodromy is not an automorphism ({report.detail})")
    levels = tuple(level_report(record, lv, cap, max_degree)
                   for lv in range(max_level + 1))
    l0 = levels[0]
    premises: dict[str, bool | None] = {
        "R1": record.fibered and not has_positive_real_root(l0.char_poly),
        "R2": (not l0.has_rational_root) and l0.some_factor_all_lambda,
        "R3": levels[1].some_factor_all_lambda if max_level >= 1 else None,
        "R4": record.fibered and all_roots_positive_real(l0.char_poly),
    }
    verdict = combine_rules(premises, max_level)
    return AnalysisReport(record, levels, premises, verdict)
