"""Path algebras of small quivers with relations, DG structure, and the
rank bookkeeping that identifies the endomorphism algebra of the rank-three
tilting object with the five-dimensional path algebra.

Composition is function-style throughout: the product b*a means "traverse a
first, then b".  Paths are stored diagrammatically, as the tuple of arrow
names in traversal order, so the relation "b*a = 0" is the arrow tuple
("a", "b").  This is the unique reading under which the loop at the first
vertex dies while the loop at the second vertex survives as a nilpotent,
matching the composites forced by the defining triangle of the extension
bundle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DiagnosticError, PreconditionError, StructureError
from .fukaya import GradedModule
from .gaussian import ExactMatrix, GaussianRational

ArrowWord = Tuple[str, ...]
Combo = Dict["Path", Fraction]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class Path:
    """A path monomial: arrow names in traversal order; () is an identity."""

    source: str
    target: str
    arrows: ArrowWord = ()


@dataclass(frozen=True)
class PathBasis:
    paths: Tuple[Path, ...]
    degrees: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.paths)

    def by_endpoints(self, source: str, target: str) -> List[Tuple[Path, int]]:
        return [
            (p, d)
            for p, d in zip(self.paths, self.degrees)
            if p.source == source and p.target == target
        ]


class QuiverPresentation:
    """Vertices, graded arrows, relations, and an optional differential.

    relations: each an integer combination of equal-endpoint nonempty
    paths, given as ((coeff, arrow_word), ...).  Only monomial and binomial
    combinations are supported; the lexicographically-largest longest word
    becomes the leading term of a rewrite rule.

    differential: arrow name -> combination of equal-endpoint paths of
    degree one higher; arrows not listed have differential zero.  The
    square of the induced derivation must vanish on every arrow.
    """

    def __init__(
        self,
        vertices: Sequence[str],
        arrows: Sequence[Arrow],
        relations: Iterable[Tuple[Tuple[int, ArrowWord], ...]] = (),
        differential: Optional[Mapping[str, Tuple[Tuple[int, ArrowWord], ...]]] = None,
    ):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise StructureError("vertex names must be distinct")
        self.arrows = tuple(arrows)
        self._arrow_by_name = {a.name: a for a in self.arrows}
        if len(self._arrow_by_name) != len(self.arrows):
            raise StructureError("arrow names must be distinct")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise StructureError(f"arrow {a.name} has unknown endpoints")
        self._rules: List[Tuple[ArrowWord, Combo]] = []
        for combo in relations:
            self._install_relation(tuple(combo))
        self.differential: Dict[str, Combo] = {}
        for name, combo in (differential or {}).items():
            arrow = self._arrow_by_name.get(name)
            if arrow is None:
                raise StructureError(f"differential on unknown arrow {name}")
            image: Combo = {}
            for coeff, word in combo:
                p = self._path_of_word(word)
                if (p.source, p.target) != (arrow.source, arrow.target):
                    raise StructureError("differential image endpoints differ")
                if self.path_degree(p) != arrow.degree + 1:
                    raise StructureError("differential must raise degree by one")
                image[p] = image.get(p, Fraction(0)) + coeff
            self.differential[name] = {p: c for p, c in image.items() if c}
        for name in self.differential:
            square = self.d_combo(self.differential[name])
            if square:
                raise StructureError(f"differential does not square to zero on {name}")

    # ----------------------------------------------------------- primitives

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_by_name[name]
        except KeyError:
            raise StructureError(f"unknown arrow {name!r}") from None

    def _path_of_word(self, word: ArrowWord) -> Path:
        if not word:
            raise StructureError("relation and differential words must be nonempty")
        first = self.arrow(word[0])
        end = first.target
        for name in word[1:]:
            a = self.arrow(name)
            if a.source != end:
                raise StructureError(f"word {word} is not a composable path")
            end = a.target
        return Path(first.source, end, tuple(word))

    def identity(self, vertex: str) -> Path:
        if vertex not in self.vertices:
            raise StructureError(f"unknown vertex {vertex!r}")
        return Path(vertex, vertex, ())

    def path_degree(self, p: Path) -> int:
        return sum(self.arrow(name).degree for name in p.arrows)

    def _install_relation(self, combo: Tuple[Tuple[int, ArrowWord], ...]) -> None:
        terms = [(Fraction(c), self._path_of_word(w)) for c, w in combo if c != 0]
        if not terms:
            return
        endpoints = {(p.source, p.target) for _, p in terms}
        if len(endpoints) != 1:
            raise StructureError("relation mixes endpoint pairs")
        if len(terms) > 2:
            raise StructureError("only monomial and binomial relations are supported")
        terms.sort(key=lambda t: (len(t[1].arrows), t[1].arrows), reverse=True)
        lead_coeff, lead = terms[0]
        rest: Combo = {}
        for c, p in terms[1:]:
            if p.arrows == lead.arrows:
                raise StructureError("relation repeats one path")
            rest[p] = -c / lead_coeff
        self._rules.append((lead.arrows, rest))

    # -------------------------------------------------------- normal forms

    def _reduce_once(self, p: Path) -> Optional[Combo]:
        """One rewrite at the leftmost reducible position, or None."""
        word = p.arrows
        for lead, rest in self._rules:
            span = len(lead)
            for at in range(len(word) - span + 1):
                if word[at : at + span] == lead:
                    out: Combo = {}
                    for sub, coeff in rest.items():
                        spliced = word[:at] + sub.arrows + word[at + span :]
                        q = (
                            self._path_of_word(spliced)
                            if spliced
                            else Path(p.source, p.target, ())
                        )
                        out[q] = out.get(q, Fraction(0)) + coeff
                    return out
        return None

    def normal_form(self, combo: Mapping[Path, Fraction], max_steps: int = 10000) -> Combo:
        work = {p: Fraction(c) for p, c in combo.items() if c}
        for _ in range(max_steps):
            reducible = next(
                ((p, r) for p in work if (r := self._reduce_once(p)) is not None),
                None,
            )
            if reducible is None:
                return {p: c for p, c in work.items() if c}
            target, replacement = reducible
            coeff = work.pop(target)
            for q, c in replacement.items():
                work[q] = work.get(q, Fraction(0)) + coeff * c
            work = {p: c for p, c in work.items() if c}
        raise DiagnosticError("rewriting did not terminate")

    def _has_lead(self, word: ArrowWord) -> bool:
        for lead, _ in self._rules:
            span = len(lead)
            if any(word[at : at + span] == lead for at in range(len(word) - span + 1)):
                return True
        return False

    def is_basis_word(self, word: ArrowWord) -> bool:
        return not self._has_lead(word)

    # ------------------------------------------------------------- algebra

    def path_product(self, late: Path, early: Path) -> Combo:
        """Function-style product late*early: early is traversed first."""
        if early.target != late.source:
            return {}
        word = early.arrows + late.arrows
        p = Path(early.source, late.target, word)
        return self.normal_form({p: Fraction(1)})

    def d_path(self, p: Path) -> Combo:
        """Leibniz extension of the arrow differential, traversal-order signs."""
        total: Combo = {}
        acc = 0
        for at, name in enumerate(p.arrows):
            image = self.differential.get(name)
            if image:
                sign = (-1) ** acc
                for q, coeff in image.items():
                    word = p.arrows[:at] + q.arrows + p.arrows[at + 1 :]
                    spliced = Path(p.source, p.target, word)
                    total[spliced] = total.get(spliced, Fraction(0)) + sign * coeff
            acc += self.arrow(name).degree
        return self.normal_form(total)

    def d_combo(self, combo: Mapping[Path, Fraction]) -> Combo:
        total: Combo = {}
        for p, c in combo.items():
            for q, v in self.d_path(p).items():
                total[q] = total.get(q, Fraction(0)) + c * v
        return {p: c for p, c in total.items() if c}


# ------------------------------------------------------------- enumeration


def path_basis(q: QuiverPresentation, length_bound: int = 8) -> PathBasis:
    """All nonzero path monomials modulo relations, by breadth-first growth.

    Raises a diagnostic when irreducible paths still appear at the bound,
    since the basis may then be infinite.
    """
    if length_bound < 1:
        raise PreconditionError("length_bound must be positive")
    paths: List[Path] = [q.identity(v) for v in q.vertices]
    frontier = paths[:]
    for length in range(1, length_bound + 1):
        new_frontier: List[Path] = []
        for p in frontier:
            for a in q.arrows:
                if a.source != p.target:
                    continue
                word = p.arrows + (a.name,)
                if q.is_basis_word(word):
                    new_frontier.append(Path(p.source, a.target, word))
        if length == length_bound and new_frontier:
            raise DiagnosticError(
                f"path basis still growing at length {length_bound}"
            )
        paths.extend(new_frontier)
        frontier = new_frontier
        if not frontier:
            break
    degrees = tuple(q.path_degree(p) for p in paths)
    return PathBasis(tuple(paths), degrees)


# ------------------------------------------------------------ Hom complexes


@dataclass(frozen=True, eq=False)
class HomComplex:
    module: GradedModule
    differentials: Dict[int, Tuple[Tuple[Fraction, ...], ...]]
    cohomology: Dict[int, int]

    @property
    def ranks(self) -> Dict[int, int]:
        return self.module.ranks


def hom_complex(q: QuiverPresentation, source: str, target: str) -> HomComplex:
    """Graded span of basis paths between two vertices with the induced d."""
    basis = path_basis(q)
    graded: Dict[int, List[Path]] = {}
    for p, d in basis.by_endpoints(source, target):
        graded.setdefault(d, []).append(p)
    module = GradedModule(
        [
            ("|".join(p.arrows) or f"id_{source}", d)
            for d in sorted(graded)
            for p in graded[d]
        ]
    )
    differentials: Dict[int, Tuple[Tuple[Fraction, ...], ...]] = {}
    ranks: Dict[int, int] = {}
    for d in sorted(graded):
        rows = graded.get(d + 1, [])
        cols = graded[d]
        index = {p: k for k, p in enumerate(rows)}
        matrix = [[Fraction(0)] * len(cols) for _ in rows]
        for col, p in enumerate(cols):
            for image, coeff in q.d_path(p).items():
                if image in index:
                    matrix[index[image]][col] = coeff
                elif image.arrows or coeff:
                    if q.path_degree(image) != d + 1:
                        raise DiagnosticError("differential is not degree one")
        if rows:
            differentials[d] = tuple(tuple(row) for row in matrix)
            exact = ExactMatrix(
                [[GaussianRational(x) for x in row] for row in matrix]
            )
            ranks[d] = exact.rank()
        else:
            ranks[d] = 0
    cohomology: Dict[int, int] = {}
    for d in sorted(graded):
        h = len(graded[d]) - ranks.get(d, 0) - ranks.get(d - 1, 0)
        if h:
            cohomology[d] = h
    return HomComplex(module, differentials, cohomology)


# ------------------------------------------------------- the two fixtures


def ordinary_quiver() -> QuiverPresentation:
    """Two vertices, arrows both ways, the traversal word (a, b) set to zero."""
    return QuiverPresentation(
        ("v0", "v1"),
        (Arrow("alpha", "v0", "v1", 0), Arrow("beta", "v1", "v0", 0)),
        relations=(((1, ("alpha", "beta")),),),
    )


def dg_quiver(variant: str = "zero") -> QuiverPresentation:
    """Two parallel arrows of degrees 0 and 1 and no relations.

    variant "zero": both differentials vanish.  variant "literal": the
    degree-zero arrow maps to the degree-one arrow, which kills the Hom
    cohomology; both readings are provided because the source presentation
    of this quiver is ambiguous on the point.
    """
    arrows = (Arrow("alpha", "v0", "v1", 0), Arrow("alpha_bar", "v0", "v1", 1))
    if variant == "zero":
        differential = None
    elif variant == "literal":
        differential = {"alpha": ((1, ("alpha_bar",)),)}
    else:
        raise PreconditionError("variant must be 'zero' or 'literal'")
    return QuiverPresentation(("v0", "v1"), arrows, differential=differential)


def composition_pattern_check() -> bool:
    """beta*alpha = 0, alpha*beta is a basis element, (alpha*beta)^2 = 0."""
    q = ordinary_quiver()
    alpha = q._path_of_word(("alpha",))
    beta = q._path_of_word(("beta",))
    beta_alpha = q.path_product(beta, alpha)
    if beta_alpha:
        return False
    alpha_beta = q.path_product(alpha, beta)
    if list(alpha_beta.values()) != [Fraction(1)]:
        return False
    loop = next(iter(alpha_beta))
    if not q.is_basis_word(loop.arrows):
        return False
    squared = q.path_product(loop, loop)
    return not squared


# ------------------------------------------------- exact-sequence chasing


@dataclass(frozen=True)
class ChaseResult:
    middle: Tuple[int, int, int]
    ranks: Tuple[int, ...]
    used_injective_connecting: bool


def les_chase(
    outer: Tuple[int, int, int, int, int, int],
    first_connecting: Optional[str] = None,
) -> ChaseResult:
    """Solve a nine-term exact sequence for its three unknown middle terms.

    The sequence is 0 -> A0 -> A1 -> A2 -> A3 -> A4 -> A5 -> A6 -> A7 ->
    A8 -> 0 with A0, A2, A3, A5, A6, A8 given (positions 1, 4, 7 unknown).
    The connecting ranks r2: A2 -> A3 and r5: A5 -> A6 are free parameters;
    each is forced to zero when either endpoint vanishes, and r2 may instead
    be pinned by first_connecting="injective" (rank = dim A2).  An
    undetermined or inconsistent chase raises a diagnostic.
    """
    a0, a2, a3, a5, a6, a8 = outer
    if min(outer) < 0:
        raise PreconditionError("dimensions must be nonnegative")
    if first_connecting not in (None, "injective"):
        raise PreconditionError("first_connecting must be None or 'injective'")
    used = False
    if a2 == 0 or a3 == 0:
        r2 = 0
    elif first_connecting == "injective":
        r2 = a2
        used = True
    else:
        raise DiagnosticError("connecting rank A2 -> A3 is undetermined")
    if a5 == 0 or a6 == 0:
        r5 = 0
    else:
        raise DiagnosticError("connecting rank A5 -> A6 is undetermined")
    r0 = a0
    r1 = a2 - r2
    r3 = a3 - r2
    r4 = a5 - r5
    r6 = a6 - r5
    r7 = a8
    ranks = (r0, r1, r2, r3, r4, r5, r6, r7)
    if min(ranks) < 0:
        raise DiagnosticError(f"inconsistent exact sequence: ranks {ranks}")
    middle = (r0 + r1, r3 + r4, r6 + r7)
    return ChaseResult(middle, ranks, used)


@dataclass(frozen=True)
class TiltingReport:
    hom_dims: Tuple[int, int, int, int]
    ext1: Tuple[int, int, int, int]
    ext2: Tuple[int, int, int, int]
    assumptions: Tuple[str, ...]

    @property
    def total(self) -> int:
        return sum(self.hom_dims)

    @property
    def higher_ext_vanish(self) -> bool:
        return not any(self.ext1) and not any(self.ext2)


INJECTIVE_CONNECTING_ASSUMPTION = (
    "the connecting map pairs with the nontrivial extension class and is "
    "injective on its one-dimensional source"
)


def end_algebra_dims_tilting(box_margin: int = 1) -> TiltingReport:
    """Hom and Ext dimensions of the rank-three bundle pair by rank chases.

    The bundle sits in 0 -> O -> X -> N -> 0 where N is the negative-section
    line bundle class (-1, 0) and the extension is nontrivial.  All four
    Hom/Ext blocks follow from the line-bundle table by four chases; only
    the chase against O consumes the named injectivity assumption.
    """
    from .toric import HirzebruchFan, PicClass, ext_dims

    fan = HirzebruchFan(2)
    n, o = PicClass(-1, 0), PicClass(0, 0)
    table = {
        (x, y): ext_dims(fan, cx, cy, box_margin).triple
        for x, cx in (("n", n), ("o", o))
        for y, cy in (("n", n), ("o", o))
    }
    if table != {
        ("o", "o"): (1, 0, 0),
        ("n", "n"): (1, 0, 0),
        ("n", "o"): (1, 1, 0),
        ("o", "n"): (0, 0, 0),
    }:
        raise DiagnosticError(f"unexpected line-bundle table: {table}")

    def chase(left: Tuple[int, int, int], right: Tuple[int, int, int], pin=None):
        outer = (left[0], right[0], left[1], right[1], left[2], right[2])
        return les_chase(outer, pin)

    # Hom(-, O): contravariant, N enters first
    to_o = chase(table[("n", "o")], table[("o", "o")], "injective")
    # Hom(-, N)
    to_n = chase(table[("n", "n")], table[("o", "n")])
    # Hom(O, -): covariant, the sub O enters first
    from_o = chase(table[("o", "o")], table[("o", "n")])
    # Hom(X, -): outer terms come from the two contravariant chases
    from_x = chase(to_o.middle, to_n.middle)

    hom = (table[("o", "o")][0], from_o.middle[0], to_o.middle[0], from_x.middle[0])
    ext1 = (table[("o", "o")][1], from_o.middle[1], to_o.middle[1], from_x.middle[1])
    ext2 = (table[("o", "o")][2], from_o.middle[2], to_o.middle[2], from_x.middle[2])
    assumptions = (INJECTIVE_CONNECTING_ASSUMPTION,) if to_o.used_injective_connecting else ()
    return TiltingReport(hom, ext1, ext2, assumptions)


# --------------------------------------------------------------- K-theory


def grothendieck_rank(number_of_exceptional_factors: int) -> int:
    """Free rank added by a semiorthogonal decomposition into that many
    exceptional factors, one rank each."""
    if number_of_exceptional_factors < 0:
        raise PreconditionError("factor count must be nonnegative")
    return number_of_exceptional_factors

def semiorthogonal_rank_sum(parts: Iterable[int]) -> int:
    total = 0
    for part in parts:
        if part < 0:
            raise PreconditionError("part ranks must be nonnegative")
        total += part
    return total
