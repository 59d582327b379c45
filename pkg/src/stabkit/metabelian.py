"""Metabelian (Eisenstein) obstructions for satellite ribbon discs.

The abelian story specializes t to a primitive cube root xi, turning Alexander
modules into Z[w]-modules.  For a metabelian representation twisted by a
character chi into Z/3, the closed-form structure theory used here is:

* for the trivial character the twisted homology is M ⊕ conj(M) of the
  abelian specialization (`one_oplus_bar`);
* for a satellite R_eta(J) with winding number 0 and eta generating A(R),
  a summand with nonzero character component contributes the base-disc part
  (the same module for either disc choice) plus A_xi(J) ⊕ conj(A_xi(J));
* for J = J0 # -J0 with its two standard discs, A(J) = A(J0) ⊕ A(J0) with
  the disc-one map i0 ⊕ i0 and the disc-two map (x, y) -> x + y, so the
  disc-one kernel is ker(i0) ⊕ ker(i0) and the disc-two kernel is the
  antidiagonal.

Only these structural facts are used; no chain-level twisted homology of a
group presentation is ever computed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import HypothesisError, SchemaError
from .knots import (
    SeifertKnot,
    SurgeryDisc,
    alexander_module_Q,
    alexander_presentation,
    branched_double_cover,
    disc_branched_kernel,
    specialize_module,
)
from .linalg import Mat, block_diag, hstack
from .modules import (
    PresentedModule,
    Submodule,
    direct_sum,
    quotient_of_submodules,
)
from .rings import EISENSTEIN


def eisenstein_alexander(knot: SeifertKnot) -> PresentedModule:
    """The Alexander presentation specialized at t = w."""
    return specialize_module(alexander_presentation(knot), "xi3")


def conjugate_module(module: PresentedModule) -> PresentedModule:
    if module.ring_tag != EISENSTEIN.tag:
        raise ValueError("conjugation is an Eisenstein-module operation")
    return PresentedModule(
        module.ring_tag, module.ngens, module.relations.map_entries(lambda x: x.conj())
    )


def one_oplus_bar(module: PresentedModule) -> PresentedModule:
    """M ⊕ conj(M): twisted homology of the diagonal (abelian) representation."""
    conj = conjugate_module(module)
    return PresentedModule(
        module.ring_tag,
        module.ngens * 2,
        block_diag(EISENSTEIN, module.relations, conj.relations),
    )


def twisted_homology_abelian_rep(knot: SeifertKnot) -> PresentedModule:
    return one_oplus_bar(eisenstein_alexander(knot))


def metabelian_obstruction(j0: SeifertKnot, d0: SurgeryDisc):
    """A_xi(J0) / (disc kernel), and whether it is nonzero.

    A nonzero quotient is the obstruction fueling the lower bound machine.
    """
    if d0.knot != j0:
        raise SchemaError("disc/knot mismatch", f"disc {d0.name!r} is not a disc for {j0.name!r}")
    ambient = eisenstein_alexander(j0)
    kern = ambient.submodule_from_int_columns(d0.class_columns())
    quotient = PresentedModule(
        ambient.ring_tag, ambient.ngens, hstack(ambient.relations, kern.generators)
    )
    return quotient, not quotient.is_zero_module()


@dataclass(frozen=True)
class DiscPairModel:
    """J = J0 # -J0 with its two standard slice discs, handled structurally.

    Disc one is the boundary connect sum of the given disc for J0 with its
    mirror; disc two is the spun (deform) disc.  On Alexander modules, with
    A(J) = A(J0) ⊕ A(J0): disc one induces i0 ⊕ i0 and disc two induces
    (x, y) -> x + y.
    """

    base_knot: SeifertKnot
    base_disc: SurgeryDisc

    def __post_init__(self):
        if self.base_disc.knot != self.base_knot:
            raise SchemaError(
                "disc/knot mismatch",
                f"disc {self.base_disc.name!r} is not a disc for {self.base_knot.name!r}",
            )


@dataclass(frozen=True)
class Character:
    """A homomorphism H_1(double branched cover) -> Z/3, one component per copy."""

    values: tuple

    def __post_init__(self):
        if any(v not in (0, 1, 2) for v in self.values):
            raise SchemaError("character values must be mod-3 residues", f"got {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def m_nonzero(self) -> int:
        return sum(1 for v in self.values if v != 0)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class SatelliteScenario:
    """N copies of the satellite R_eta(J), J = J0 # -J0, with two disc choices.

    eta is carried as validated flags: its class must generate the base
    Alexander module (checked over Q[t^±1] and Z[w]) and its winding number
    must be zero.  The base knot needs a finite double branched cover with
    3-torsion so that Z/3 characters exist.
    """

    base_knot: SeifertKnot
    base_disc: SurgeryDisc
    eta_class: tuple
    companion: DiscPairModel
    copies: int
    eta_winding_zero: bool = True

    def __post_init__(self):
        if self.base_disc.knot != self.base_knot:
            raise SchemaError(
                "disc/knot mismatch",
                f"disc {self.base_disc.name!r} is not a disc for {self.base_knot.name!r}",
            )
        if self.copies < 0:
            raise SchemaError("copies must be nonnegative", f"got {self.copies}")
        if not self.eta_winding_zero:
            raise SchemaError(
                "satellite winding number must be zero",
                "the structural kernel splitting needs winding number 0",
            )
        aq = alexander_module_Q(self.base_knot)
        if aq.generating_rank > 1:
            raise SchemaError(
                "base Alexander module not cyclic",
                f"generating rank {aq.generating_rank} for {self.base_knot.name!r}",
            )
        for ambient in (aq, eisenstein_alexander(self.base_knot)):
            quot = PresentedModule(
                ambient.ring_tag,
                ambient.ngens,
                hstack(
                    ambient.relations,
                    ambient.submodule_from_int_columns([self.eta_class]).generators,
                ),
            )
            if not quot.is_zero_module():
                raise SchemaError(
                    "eta must generate the base Alexander module",
                    f"class {self.eta_class} does not generate over {ambient.ring.name}",
                )
        cover = branched_double_cover(self.base_knot)
        if cover.free_rank > 0:
            raise SchemaError(
                "base double branched cover must be finite",
                f"free rank {cover.free_rank} for {self.base_knot.name!r}",
            )
        if not any(d % 3 == 0 for d in cover.torsion_invariants):
            raise SchemaError(
                "base double branched cover has no 3-torsion",
                f"invariant factors {list(cover.torsion_invariants)}",
            )


@dataclass(frozen=True)
class EisensteinKernelPair:
    """The two disc kernels inside a common twisted-homology module."""

    ambient: PresentedModule
    kernel_one: Submodule
    kernel_two: Submodule


def character_space_dimension(scenario: SatelliteScenario) -> int:
    """dim_F3 Hom(H_1 of the N-fold cover, Z/3) = N * (3-divisible invariant factors)."""
    cover = branched_double_cover(scenario.base_knot)
    per_copy = sum(1 for d in cover.torsion_invariants if d % 3 == 0)
    return scenario.copies * per_copy


def _f3_rref(rows: list[list[int]], width: int) -> list[list[int]]:
    """Reduced row echelon form over F3; returns the nonzero rows."""
    mat = [list(r) for r in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % 3 != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 if mat[r][c] % 3 == 1 else 2
        mat[r] = [(x * inv) % 3 for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % 3 != 0:
                f = mat[i][c] % 3
                mat[i] = [(a - f * b) % 3 for a, b in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
    return [row for row in mat[:r]]


def _f3_nullspace(rows: list[list[int]], width: int) -> list[list[int]]:
    rref = _f3_rref(rows, width)
    pivot_cols = []
    for row in rref:
        pivot_cols.append(next(c for c in range(width) if row[c] % 3 != 0))
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [0] * width
        vec[fc] = 1
        for row, pc in zip(rref, pivot_cols):
            vec[pc] = (-row[fc]) % 3
        basis.append(vec)
    return basis


def character_selection(n: int, constraints) -> Character:
    """A character vanishing on every constraint with at least n - m nonzero slots.

    The solution space basis is put in echelon form; the sum of the basis
    already hits every pivot coordinate, and a greedy pass then pushes the
    support higher.  An exhaustive sweep of the solution space is the
    fallback guarantee.
    """
    rows = [list(c) for c in constraints]
    m = len(rows)
    if m > n:
        raise SchemaError("too many constraints", f"{m} constraints in dimension {n}")
    if any(len(r) != n for r in rows):
        raise SchemaError("constraint has wrong length", f"expected vectors of length {n}")
    rows = [[x % 3 for x in r] for r in rows]
    basis = _f3_rref(_f3_nullspace(rows, n), n)

    def support(vec: list[int]) -> int:
        return sum(1 for x in vec if x % 3 != 0)

    chi = [0] * n
    for b in basis:
        chi = [(a + x) % 3 for a, x in zip(chi, b)]
    improved = True
    while improved:
        improved = False
        for b in basis:
            for coeff in (1, 2):
                cand = [(a + coeff * x) % 3 for a, x in zip(chi, b)]
                if support(cand) > support(chi):
                    chi = cand
                    improved = True
    if support(chi) < n - m:
        best = chi
        for coeffs in itertools.product(range(3), repeat=len(basis)):
            cand = [0] * n
            for k, b in zip(coeffs, basis):
                if k:
                    cand = [(a + k * x) % 3 for a, x in zip(cand, b)]
            if support(cand) > support(best):
                best = cand
        chi = best
    return Character(tuple(chi))


def _antidiagonal_columns(ring, n: int) -> Mat:
    """Columns (e_i, -e_i) spanning { (x, -x) } in a double block of n generators."""
    cols = []
    for i in range(n):
        col = [ring.zero] * (2 * n)
        col[i] = ring.one
        col[n + i] = ring.neg(ring.one)
        cols.append(col)
    return Mat(cols, 2 * n).transpose() if cols else Mat([() for _ in range(2 * n)], 0)


def _int_columns_mat(ring, columns, nrows: int) -> Mat:
    return Mat(
        [[ring.from_int(col[i]) for col in columns] for i in range(nrows)],
        len(columns),
    )


def satellite_kernel_pair(scenario: SatelliteScenario, chi: Character) -> EisensteinKernelPair:
    """Both disc-choice kernels of the satellite, assembled block by block.

    Summands with a nonzero character component contribute the (disc
    independent) base part plus the companion block; zero components
    contribute the untwisted base kernel, identical for both choices.
    """
    if len(chi) != scenario.copies:
        raise SchemaError(
            "character length mismatch",
            f"character {chi} for {scenario.copies} copies",
        )
    ring = EISENSTEIN
    base_xi = eisenstein_alexander(scenario.base_knot)
    base_classes = scenario.base_disc.class_columns()
    base_kernel = base_xi.submodule_from_int_columns(base_classes)

    # base part carried by a twisted summand: same submodule either way
    carrier = one_oplus_bar(base_kernel.presentation)
    carrier_all = Mat.identity(ring, carrier.ngens)

    # untwisted block: A_xi(R) ⊕ conj, kernel = base disc classes in both halves
    untwisted = one_oplus_bar(base_xi)
    half_cols = _int_columns_mat(ring, base_classes, base_xi.ngens)
    untwisted_kernel_cols = block_diag(ring, half_cols, half_cols)

    # companion block: (A ⊕ A ⊕ conj A ⊕ conj A) for A = A_xi(J0)
    comp_xi = eisenstein_alexander(scenario.companion.base_knot)
    comp_classes = scenario.companion.base_disc.class_columns()
    comp_cols = _int_columns_mat(ring, comp_classes, comp_xi.ngens)
    comp_block = one_oplus_bar(direct_sum(comp_xi, comp_xi))
    comp_k1 = block_diag(ring, comp_cols, comp_cols, comp_cols, comp_cols)
    anti = _antidiagonal_columns(ring, comp_xi.ngens)
    comp_k2 = block_diag(ring, anti, anti)

    blocks: list[tuple[PresentedModule, Mat, Mat]] = []
    for v in chi.values:
        if v != 0:
            blocks.append((carrier, carrier_all, carrier_all))
            blocks.append((comp_block, comp_k1, comp_k2))
        else:
            blocks.append((untwisted, untwisted_kernel_cols, untwisted_kernel_cols))

    if blocks:
        ambient = direct_sum(*(b[0] for b in blocks))
        k1 = block_diag(ring, *(b[1] for b in blocks))
        k2 = block_diag(ring, *(b[2] for b in blocks))
    else:
        ambient = PresentedModule(ring.tag, 0, Mat([], 0))
        k1 = k2 = Mat([], 0)
    return EisensteinKernelPair(ambient, Submodule(ambient, k1), Submodule(ambient, k2))


def satellite_twisted_kernels(
    scenario: SatelliteScenario, chi: Character, disc_choice: str
) -> Submodule:
    pair = satellite_kernel_pair(scenario, chi)
    if disc_choice == "one":
        return pair.kernel_one
    if disc_choice == "two":
        return pair.kernel_two
    raise ValueError(f"disc_choice must be 'one' or 'two', got {disc_choice!r}")


def kernel_pair_quotient(pair: EisensteinKernelPair) -> PresentedModule:
    """ker(disc two) / (ker(disc one) ∩ ker(disc two)): the bound's witness module."""
    return quotient_of_submodules(pair.kernel_two, pair.kernel_one)


def theorem_C_lower_bound(scenario: SatelliteScenario) -> int:
    """Least h with 2h >= N - 2h, once the obstruction hypotheses hold.

    With h 1-handles, a character orthogonal to the extension constraints
    survives with at least N - 2h nonzero components; each contributes a
    nonzero obstruction block, and the handle count bounds the quotient's
    generating rank by 2h.  Hence 2h >= N - 2h, i.e. h >= ceil(N / 4).
    """
    _, nonzero = metabelian_obstruction(
        scenario.companion.base_knot, scenario.companion.base_disc
    )
    if not nonzero:
        raise HypothesisError(
            "obstruction vanishes",
            f"A_xi({scenario.companion.base_knot.name}) / disc kernel is zero",
        )
    cover = branched_double_cover(scenario.base_knot)
    kern = disc_branched_kernel(scenario.base_disc, cover)
    ring = cover.ring
    three_h1 = Submodule(
        cover, Mat.identity(ring, cover.ngens).map_entries(lambda x: 3 * x)
    )
    if not three_h1.contains(kern):
        raise HypothesisError(
            "branched kernel not contained in 3*H1",
            "characters need not vanish on the disc kernel, so they may not extend",
        )
    return (scenario.copies + 3) // 4
