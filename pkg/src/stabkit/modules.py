"""Finitely presented modules over a Euclidean domain, and their calculus.

A module is R^ngens / (column span of `relations`); submodules are given by
generator columns inside such a quotient.  Everything reduces to Smith normal
form of block matrices:

* membership of v in span(G) mod span(L) is solvability of [G | L] x = v;
* the defining relations of a submodule are the x-projection of
  ker [G | L];
* intersections come from ker [G1 | G2 | L];
* quotients of submodules replace L by [G_bottom | L].

Kernels of matrices over a PID are free, so projecting a kernel basis gives
honest generating sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .linalg import (
    Mat,
    SmithDecomposition,
    block_diag,
    hstack,
    kernel_basis,
    mat_mul,
    smith_normal_form,
    solve_with,
)
from .rings import RINGS_BY_TAG, canonical_associate


@dataclass(frozen=True)
class PresentedModule:
    """R^ngens modulo the column span of `relations` (ngens x nrels)."""

    ring_tag: str
    ngens: int
    relations: Mat

    def __post_init__(self):
        if self.ring_tag not in RINGS_BY_TAG:
            raise ValueError(f"unknown ring tag {self.ring_tag!r}")
        if self.relations.nrows != self.ngens:
            raise ValueError(
                f"relations have {self.relations.nrows} rows for {self.ngens} generators"
            )

    @property
    def ring(self):
        return RINGS_BY_TAG[self.ring_tag]

    @cached_property
    def _diag_snf(self) -> SmithDecomposition:
        return smith_normal_form(self.ring, self.relations, with_u=False, with_v=False)

    @cached_property
    def _relation_snf(self) -> SmithDecomposition:
        return smith_normal_form(self.ring, self.relations, with_u=True, with_v=True)

    def relations_contain_columns(self, cols: Mat) -> bool:
        """Do the given ambient coordinate columns vanish in this module?"""
        return solve_with(self.ring, self._relation_snf, self.relations, cols) is not None

    @property
    def generating_rank(self) -> int:
        """Minimal number of generators, by the structure theorem."""
        return self.ngens - self._diag_snf.unit_count

    @property
    def free_rank(self) -> int:
        return self.ngens - self._diag_snf.rank

    @property
    def torsion_invariants(self) -> tuple:
        """Nonunit, nonzero invariant factors in divisibility order."""
        ring = self.ring
        return tuple(x for x in self._diag_snf.invariant_factors if not ring.is_zero(x))

    def order(self):
        """Product of invariant factors, canonical; zero iff free rank > 0."""
        ring = self.ring
        if self.free_rank > 0:
            return ring.zero
        acc = ring.one
        for x in self._diag_snf.diagonal:
            acc = ring.mul(acc, x)
        return canonical_associate(ring, acc)

    def is_zero_module(self) -> bool:
        return self.generating_rank == 0

    def iso_invariants(self) -> tuple:
        """(free rank, torsion invariant factors): a complete isomorphism invariant."""
        return (self.free_rank, self.torsion_invariants)

    def full_submodule(self) -> "Submodule":
        return Submodule(self, Mat.identity(self.ring, self.ngens))

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, Mat([() for _ in range(self.ngens)], 0))

    def submodule_from_int_columns(self, columns) -> "Submodule":
        ring = self.ring
        gens = Mat(
            [[ring.from_int(col[i]) for col in columns] for i in range(self.ngens)],
            len(columns),
        )
        return Submodule(self, gens)


def modules_isomorphic(m1: PresentedModule, m2: PresentedModule) -> bool:
    return m1.ring_tag == m2.ring_tag and m1.iso_invariants() == m2.iso_invariants()


def direct_sum(*modules: PresentedModule) -> PresentedModule:
    if not modules:
        raise ValueError("direct sum of nothing")
    tag = modules[0].ring_tag
    if any(m.ring_tag != tag for m in modules):
        raise ValueError("direct sum over mixed rings")
    ring = modules[0].ring
    return PresentedModule(
        tag,
        sum(m.ngens for m in modules),
        block_diag(ring, *(m.relations for m in modules)),
    )


@dataclass(frozen=True)
class Submodule:
    """The span of `generators` columns inside `ambient` (modulo its relations)."""

    ambient: PresentedModule
    generators: Mat

    def __post_init__(self):
        if self.generators.nrows != self.ambient.ngens:
            raise ValueError(
                f"generator columns have {self.generators.nrows} rows in an "
                f"ambient with {self.ambient.ngens} generators"
            )

    @property
    def ring(self):
        return self.ambient.ring

    @cached_property
    def _span_matrix(self) -> Mat:
        return hstack(self.generators, self.ambient.relations)

    @cached_property
    def _span_snf(self) -> SmithDecomposition:
        return smith_normal_form(self.ring, self._span_matrix, with_u=True, with_v=True)

    def contains_columns(self, cols: Mat) -> bool:
        return solve_with(self.ring, self._span_snf, self._span_matrix, cols) is not None

    def contains(self, other: "Submodule") -> bool:
        if other.ambient != self.ambient:
            raise ValueError("submodules live in different ambient modules")
        return self.contains_columns(other.generators)

    def spans_equal(self, other: "Submodule") -> bool:
        return self.contains(other) and other.contains(self)

    def is_zero(self) -> bool:
        """True when every generator already lies in the ambient relations."""
        return self.ambient.relations_contain_columns(self.generators)

    def sum(self, other: "Submodule") -> "Submodule":
        if other.ambient != self.ambient:
            raise ValueError("submodules live in different ambient modules")
        return Submodule(self.ambient, hstack(self.generators, other.generators))

    @cached_property
    def presentation(self) -> PresentedModule:
        """Presents this span abstractly: R^m / {x : G x in span(relations)}."""
        m = self.generators.ncols
        ker = kernel_basis(self.ring, self._span_matrix)
        rels = ker.take_rows(m)
        return PresentedModule(self.ambient.ring_tag, m, rels)

    @property
    def generating_rank(self) -> int:
        return self.presentation.generating_rank

    def order(self):
        return self.presentation.order()


def submodule_presentation(s: Submodule) -> PresentedModule:
    return s.presentation


def submodule_intersection(s1: Submodule, s2: Submodule) -> Submodule:
    """Generators of span(s1) ∩ span(s2) inside the common ambient quotient."""
    if s1.ambient != s2.ambient:
        raise ValueError("intersection needs a common ambient module")
    ring = s1.ring
    g1, g2, rel = s1.generators, s2.generators, s1.ambient.relations
    ker = kernel_basis(ring, hstack(g1, g2, rel))
    a_part = ker.take_rows(g1.ncols)
    gens = mat_mul(ring, g1, a_part)
    return Submodule(s1.ambient, gens)


def quotient_of_submodules(top: Submodule, bottom: Submodule) -> PresentedModule:
    """Presents span(top) / (span(bottom) ∩ span(top)).

    Realized as R^m_top / { x : G_top x in column span of [G_bottom | L] }.
    """
    if top.ambient != bottom.ambient:
        raise ValueError("quotient needs a common ambient module")
    ring = top.ring
    m = top.generators.ncols
    ker = kernel_basis(
        ring, hstack(top.generators, bottom.generators, top.ambient.relations)
    )
    rels = ker.take_rows(m)
    return PresentedModule(top.ambient.ring_tag, m, rels)


@dataclass(frozen=True)
class ModuleMap:
    """A homomorphism source -> target given on presentation generators.

    matrix is target.ngens x source.ngens; construction checks that every
    source relation lands in the target relation span, i.e. well-definedness.
    """

    source: PresentedModule
    target: PresentedModule
    matrix: Mat

    def __post_init__(self):
        if self.source.ring_tag != self.target.ring_tag:
            raise ValueError("map between modules over different rings")
        if self.matrix.nrows != self.target.ngens or self.matrix.ncols != self.source.ngens:
            raise ValueError(
                f"map matrix is {self.matrix.nrows}x{self.matrix.ncols}, expected "
                f"{self.target.ngens}x{self.source.ngens}"
            )
        ring = self.source.ring
        image_of_relations = mat_mul(ring, self.matrix, self.source.relations)
        if not self.target.relations_contain_columns(image_of_relations):
            raise ValueError("matrix does not send source relations into target relations")


def map_kernel(f: ModuleMap) -> Submodule:
    """The kernel { x : f(x) = 0 in target } as a submodule of the source."""
    ring = f.source.ring
    ker = kernel_basis(ring, hstack(f.matrix, f.target.relations))
    gens = ker.take_rows(f.source.ngens)
    return Submodule(f.source, gens)


def map_cokernel(f: ModuleMap) -> PresentedModule:
    """target / image(f): append the map columns to the target relations."""
    return PresentedModule(
        f.target.ring_tag,
        f.target.ngens,
        hstack(f.target.relations, f.matrix),
    )


def map_image(f: ModuleMap) -> Submodule:
    return Submodule(f.target, f.matrix)
