"""Witt-class decisions: triviality, equality, invariant profiles, canonical
shapes, the class census, and the structural verification suites.

A class is zero exactly when its rank is even and its signed discriminant and
Clifford class both vanish; all higher filtration steps are trivial for these
curves, so the three invariants decide everything.  Equality is always decided
on the difference, never by rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .forms import (
    DiagonalForm,
    Generator,
    enumerate_generators,
    quaternion_norm_form,
)
from .groups import (
    BrauerClass,
    CurveConfig,
    GlobalSquareClass,
    UnitSquareClass,
    enumerate_pic,
)
from .group_ring import (
    ResidueWittClass,
    enumerate_group_ring_elements,
    from_group_ring,
    to_group_ring,
)
from .symbols import hasse_invariant, witt_invariant


def is_trivial(form: DiagonalForm) -> bool:
    """True iff the form represents the zero Witt class."""
    if form.rank % 2:
        return False
    if not form.signed_discriminant().is_trivial:
        return False
    return hasse_invariant(form).is_trivial


def equals(e: DiagonalForm, f: DiagonalForm) -> bool:
    """Witt equality, decided on the difference e + (-f)."""
    e._require_same_config(f)
    return is_trivial(e + (-f))


@dataclass(frozen=True, slots=True)
class InvariantProfile:
    """Rank parity, signed discriminant, and (when defined) the Clifford class.

    witt_inv is present exactly when the class has even rank and trivial
    signed discriminant.
    """

    rank_parity: int
    signed_disc: GlobalSquareClass
    witt_inv: BrauerClass | None


def invariant_profile(form: DiagonalForm) -> InvariantProfile:
    parity = form.rank % 2
    signed = form.signed_discriminant()
    witt = None
    if parity == 0 and signed.is_trivial:
        witt = witt_invariant(form)
    return InvariantProfile(parity, signed, witt)


class Shape(Enum):
    """The canonical representative shapes, in their fixed listing order.

    Members are named <residue part>_<ramified part> by the Witt-class type
    (zero, odd rank, even nonzero) of each group-ring component; values are
    the shape templates with s*L the residue slot and t*pi*M the ramified one.
    """

    ODD_ZERO = "<s*L>"
    ZERO_ODD = "<t*pi*M>"
    EVEN_ZERO = "<1,s*L>"
    ODD_ODD = "<s*L,t*pi*M>"
    ZERO_EVEN = "<pi,t*pi*M>"
    EVEN_ODD = "<1,s*L,t*pi*M>"
    ODD_EVEN = "<s*L,pi,t*pi*M>"
    EVEN_EVEN = "<1,s*L,pi,t*pi*M>"
    ZERO = "ZERO"


NONTRIVIAL_SHAPES: tuple[Shape, ...] = tuple(s for s in Shape if s is not Shape.ZERO)


def _component_type(cls: ResidueWittClass) -> str:
    if cls.parity:
        return "odd"
    return "zero" if cls.is_zero else "even"


_SHAPE_BY_TYPES = {
    ("odd", "zero"): Shape.ODD_ZERO,
    ("zero", "odd"): Shape.ZERO_ODD,
    ("even", "zero"): Shape.EVEN_ZERO,
    ("odd", "odd"): Shape.ODD_ODD,
    ("zero", "even"): Shape.ZERO_EVEN,
    ("even", "odd"): Shape.EVEN_ODD,
    ("odd", "even"): Shape.ODD_EVEN,
    ("even", "even"): Shape.EVEN_EVEN,
    ("zero", "zero"): Shape.ZERO,
}


@dataclass(frozen=True, slots=True)
class CanonicalShape:
    """A shape tag together with the concrete minimal representative."""

    tag: Shape
    payload: DiagonalForm

    @property
    def is_zero(self) -> bool:
        return self.tag is Shape.ZERO


def canonical_form(form: DiagonalForm) -> CanonicalShape:
    """Canonical representative of the Witt class of a form.

    Round-trips through the group-ring coordinates, whose component types
    pick the shape and whose minimal representatives fill the template.  Two
    forms get identical results exactly when they are Witt-equal, and the
    payload itself maps back to the same result.
    """
    x = to_group_ring(form)
    tag = _SHAPE_BY_TYPES[(_component_type(x.a), _component_type(x.b))]
    return CanonicalShape(tag, from_group_ring(x))


@dataclass(frozen=True)
class CensusReport:
    """Distinct Witt classes of a configuration, counted per canonical shape."""

    config: CurveConfig
    total: int
    shape_counts: tuple[tuple[Shape, int], ...]

    @property
    def nontrivial_total(self) -> int:
        return sum(count for _, count in self.shape_counts)


def enumerate_classes(cfg: CurveConfig, rank_bound: int = 4) -> CensusReport:
    """Census of all 16n^2 classes, grouped by canonical shape.

    Shape rows cover the nontrivial classes; the total includes the zero
    class.  Refuses configurations with picard_rank above rank_bound.
    """
    if cfg.picard_rank > rank_bound:
        raise ValueError(
            f"bound exceeded: picard_rank {cfg.picard_rank} > rank bound {rank_bound}"
        )
    counts = {shape: 0 for shape in Shape}
    elements = enumerate_group_ring_elements(cfg)
    for x in elements:
        counts[_SHAPE_BY_TYPES[(_component_type(x.a), _component_type(x.b))]] += 1
    return CensusReport(
        config=cfg,
        total=len(elements),
        shape_counts=tuple((shape, counts[shape]) for shape in NONTRIVIAL_SHAPES),
    )


@dataclass(frozen=True)
class QuaternionDistinctnessReport:
    """Distinctness of the 2n quaternion norm forms."""

    config: CurveConfig
    class_count: int
    pairwise_distinct: bool
    trivial_symbols: tuple[str, ...]
    passed: bool


def verify_quaternion_distinctness(cfg: CurveConfig) -> QuaternionDistinctnessReport:
    """Check that the 2n norm forms fall into 2n distinct Witt classes.

    Exactly one of them, the one with trivial symbol, may be Witt-trivial.
    """
    units = (UnitSquareClass(0), UnitSquareClass(1))
    labeled = [
        (BrauerClass(u, line), quaternion_norm_form(cfg, u, line))
        for u in units
        for line in enumerate_pic(cfg)
    ]
    distinct = True
    for i, (_, form_a) in enumerate(labeled):
        for _, form_b in labeled[i + 1 :]:
            if equals(form_a, form_b):
                distinct = False
    trivial = tuple(str(cls) for cls, form in labeled if is_trivial(form))
    passed = distinct and trivial == ("(1, pi)",)
    return QuaternionDistinctnessReport(
        config=cfg,
        class_count=len(labeled),
        pairwise_distinct=distinct,
        trivial_symbols=trivial,
        passed=passed,
    )


@dataclass(frozen=True)
class RankOneStructureReport:
    """Group structure of the rank-1 classes under tensor product."""

    config: CurveConfig
    order: int
    classes_distinct: bool
    exponent_two: bool
    homomorphism_ok: bool
    witness: tuple[tuple[str, tuple[str, str]], ...]
    passed: bool


def rank_one_group_structure(cfg: CurveConfig) -> RankOneStructureReport:
    """Verify the 4n rank-1 classes form the product of the base field's four
    square classes with the 2-torsion Picard group.

    The witness maps each generator to its (base field class, line bundle)
    coordinate pair; tensor product must match coordinatewise multiplication.
    """
    gens = enumerate_generators(cfg)
    base_labels = {(0, 0): "1", (1, 0): "s", (0, 1): "pi", (1, 1): "s*pi"}

    def coordinates(g: Generator) -> tuple[str, str]:
        return base_labels[(g.unit.bit, g.pi_exp)], str(g.line)

    singles = {g: DiagonalForm(cfg, (g,)) for g in gens}
    distinct = True
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if equals(singles[g], singles[h]):
                distinct = False

    one = DiagonalForm(cfg, (Generator.one(cfg.picard_rank),))
    exponent_two = all(equals(singles[g] * singles[g], one) for g in gens)

    homomorphism_ok = all(
        coordinates(g * h) == (
            base_labels[(g.unit.bit ^ h.unit.bit, g.pi_exp ^ h.pi_exp)],
            str(g.line + h.line),
        )
        and equals(singles[g] * singles[h], DiagonalForm(cfg, (g * h,)))
        for g in gens
        for h in gens
    )

    witness = tuple((str(g), coordinates(g)) for g in gens)
    passed = distinct and exponent_two and homomorphism_ok and len(gens) == 4 * cfg.pic_order
    return RankOneStructureReport(
        config=cfg,
        order=len(gens),
        classes_distinct=distinct,
        exponent_two=exponent_two,
        homomorphism_ok=homomorphism_ok,
        witness=witness,
        passed=passed,
    )


@dataclass(frozen=True)
class RelationSuiteReport:
    """Exhaustive check of the two rank-2 generator relations."""

    config: CurveConfig
    checked: int
    failures: tuple[str, ...]
    passed: bool


def verify_generator_relations(cfg: CurveConfig) -> RelationSuiteReport:
    """Verify <uL, vM> = <1, uvLM> and <pi*uL, pi*vM> = <pi, pi*uvLM>
    for all unit classes u, v and all bundle classes L, M.
    """
    rank = cfg.picard_rank
    units = (UnitSquareClass(0), UnitSquareClass(1))
    pic = enumerate_pic(cfg)
    checked = 0
    failures: list[str] = []
    for u in units:
        for v in units:
            for line_l in pic:
                for line_m in pic:
                    a = Generator(u, 0, line_l)
                    b = Generator(v, 0, line_m)
                    product = Generator(u + v, 0, line_l + line_m)
                    lhs = DiagonalForm(cfg, (a, b))
                    rhs = DiagonalForm(cfg, (Generator.one(rank), product))
                    checked += 1
                    if not equals(lhs, rhs):
                        failures.append(f"residue relation failed at {lhs}")
                    pi = Generator.pi(rank)
                    lhs_pi = DiagonalForm(cfg, (pi * a, pi * b))
                    rhs_pi = DiagonalForm(cfg, (pi, pi * product))
                    checked += 1
                    if not equals(lhs_pi, rhs_pi):
                        failures.append(f"ramified relation failed at {lhs_pi}")
    return RelationSuiteReport(
        config=cfg,
        checked=checked,
        failures=tuple(failures),
        passed=not failures,
    )
