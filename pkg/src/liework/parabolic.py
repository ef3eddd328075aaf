"""Standard parabolic subalgebras and their attached linear data.

For a subset gamma of simple-root indices (1-based), the standard
parabolic p is spanned by the Cartan subalgebra, all positive root
spaces, and the negative root spaces of roots supported inside gamma.
Alongside p this module computes the Levi factor, the nilradical u, the
derived subalgebras, Killing perps, and three quotients: the torus
quotient p/[p,p], the abelianized nilradical u/[u,u], and the twist
space [p,p]-perp / u.

Every structural identity is checked at construction time and failures
raise ParabolicAuditError naming the identity, so downstream code can
rely on the datum without re-deriving anything.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chevalley import ChevalleyAlgebra, algebra
from .exactlin import (
    EchelonBuilder,
    IntMat,
    Mat,
    QuotientSpace,
    Subspace,
    Vec,
    ZERO,
    class_of,
    intersect,
    perp_wrt_form,
    quotient,
    rref,
    smith_normal_form,
    span,
    subspace_sum,
)


class ParabolicAuditError(RuntimeError):
    """A construction-time identity failed; the message names it."""


class RichardsonSearchError(RuntimeError):
    """Retries exhausted without an open tangent space."""

    def __init__(self, message: str, best_tangent_dim: int):
        super().__init__(message)
        self.best_tangent_dim = best_tangent_dim


@dataclass(frozen=True, eq=False)
class ParabolicDatum:
    """A parabolic subalgebra with its full verified dossier of spaces."""

    alg: ChevalleyAlgebra
    gamma: frozenset[int]
    p: Subspace
    levi: Subspace
    levi_derived: Subspace
    u: Subspace
    u_derived: Subspace
    p_derived: Subspace
    p_perp: Subspace
    p_derived_perp: Subspace
    a_p: QuotientSpace
    a_u: QuotientSpace
    twist_space: QuotientSpace
    torus_rank: int
    levi_root_positions: tuple[int, ...]  # positive-root indices inside gamma
    u_root_positions: tuple[int, ...]  # positive-root indices outside gamma

    def label(self) -> str:
        idx = ",".join(str(i) for i in sorted(self.gamma)) or "-"
        return f"{self.alg.cartan.type_label}:{idx}"


@dataclass(frozen=True)
class TorusCharacterSet:
    """Distinct torus weights of a vector's components, mod the gamma roots.

    Rows are root coordinates with the gamma positions deleted (the gamma
    simple roots are unit vectors, so deletion realizes the quotient
    lattice).  Row count equals the number of distinct restricted weights.
    """

    characters: IntMat


@dataclass(frozen=True)
class RichardsonCertificate:
    element: Vec
    tangent: Subspace
    is_open: bool


@dataclass(frozen=True)
class TorsorCertificate:
    infinitesimal_free: bool
    lattice_generating: bool
    induced_rank: int
    character_set: TorusCharacterSet
    smith_invariants: tuple[int, ...]


def parse_case(text: str) -> tuple[str, frozenset[int]]:
    """Parse a case string like "A3:1,3" or "B2:-" (empty gamma)."""
    if ":" not in text:
        raise ValueError(f"case spec {text!r} must look like TYPE:indices or TYPE:-")
    label, _, tail = text.partition(":")
    if tail == "-":
        return label, frozenset()
    try:
        idx = frozenset(int(t) for t in tail.split(","))
    except ValueError:
        raise ValueError(f"bad index list in case spec {text!r}") from None
    if not idx or min(idx) < 1:
        raise ValueError(f"indices in {text!r} must be positive (use '-' for empty)")
    return label, idx


def _supported_on(coords: Sequence[int], gamma: frozenset[int]) -> bool:
    return all(c == 0 or (i + 1) in gamma for i, c in enumerate(coords))


def build_parabolic(alg: ChevalleyAlgebra, gamma: Iterable[int]) -> ParabolicDatum:
    """Build and verify the dossier for the standard parabolic of gamma."""
    gset = frozenset(int(i) for i in gamma)
    if not gset <= set(range(1, alg.rank + 1)):
        raise ValueError(f"gamma {sorted(gset)} not a subset of 1..{alg.rank}")
    dim = alg.dim
    num_pos = alg.num_positive

    levi_pos = tuple(k for k, r in enumerate(alg.positive_roots)
                     if _supported_on(r.coords, gset))
    u_pos = tuple(k for k in range(num_pos) if k not in set(levi_pos))

    h_idx = [num_pos + i for i in range(alg.rank)]
    levi_idx = ([k for k in levi_pos] + h_idx
                + [num_pos + alg.rank + k for k in levi_pos])
    u_idx = list(u_pos)
    p_idx = sorted(levi_idx + u_idx)

    def coord_span(indices: Sequence[int]) -> Subspace:
        return span([alg.one_hot(i) for i in indices], dim)

    p = coord_span(p_idx)
    levi = coord_span(levi_idx)
    u = coord_span(u_idx)

    if levi.dim + u.dim != p.dim:
        raise ParabolicAuditError("p = levi (+) u failed: dimensions do not add")
    if intersect(levi, u).dim != 0:
        raise ParabolicAuditError("p = levi (+) u failed: nonzero intersection")

    levi_derived = alg.bracket_space(levi, levi)
    u_derived = alg.bracket_space(u, u)
    p_derived = alg.bracket_space(p, p)
    if p_derived != subspace_sum(levi_derived, u):
        raise ParabolicAuditError("[p,p] = [l,l] + u failed")

    p_perp = perp_wrt_form(p, alg.killing_gram)
    if p_perp != u:
        raise ParabolicAuditError("p-perp = u failed")
    p_derived_perp = perp_wrt_form(p_derived, alg.killing_gram)
    if not p.contains_space(p_derived_perp):
        raise ParabolicAuditError("[p,p]-perp inside p failed")

    a_p = quotient(p, p_derived)
    a_u = quotient(u, u_derived)
    twist_space = quotient(p_derived_perp, u)

    torus_rank = alg.rank - len(gset)
    if a_p.dim != torus_rank:
        raise ParabolicAuditError(
            f"dim p/[p,p] = {a_p.dim} != rank - |gamma| = {torus_rank}")
    if twist_space.dim != torus_rank:
        raise ParabolicAuditError("dim twist space != torus rank")

    # Killing form must pair the two torus-rank quotients perfectly
    if torus_rank:
        gram = Mat.from_rows(
            [[alg.killing(a_p.section.row(i), twist_space.section.row(j))
              for j in range(torus_rank)] for i in range(torus_rank)],
            torus_rank)
        if len(rref(gram)[1]) != torus_rank:
            raise ParabolicAuditError(
                "Killing pairing of p/[p,p] with twist space is degenerate")

    return ParabolicDatum(
        alg=alg, gamma=gset, p=p, levi=levi, levi_derived=levi_derived,
        u=u, u_derived=u_derived, p_derived=p_derived, p_perp=p_perp,
        p_derived_perp=p_derived_perp, a_p=a_p, a_u=a_u,
        twist_space=twist_space, torus_rank=torus_rank,
        levi_root_positions=levi_pos, u_root_positions=u_pos)


@functools.lru_cache(maxsize=None)
def standard_parabolic(type_label: str, gamma: frozenset[int]) -> ParabolicDatum:
    """Cached dossier for (type label, gamma)."""
    return build_parabolic(algebra(type_label), gamma)


@dataclass(frozen=True)
class DimensionReport:
    dim_g: int
    dim_p: int
    dim_levi: int
    dim_u: int
    dim_u_derived: int
    dim_p_derived: int
    dim_p_derived_perp: int
    dim_a_p: int
    dim_a_u: int
    torus_rank: int
    dim_c: int
    dim_uc: int
    leaf_dim: int


def dimension_report(pd: ParabolicDatum) -> DimensionReport:
    """All dossier dimensions plus the derived family/leaf counts.

    dim_c is the codimension of p (the open-orbit piece of the
    nilradical), dim_uc the total space of the incidence family, and
    leaf_dim the generic symplectic leaf; leaf_dim = 2*dim_c is asserted.
    """
    dim_c = pd.alg.dim - pd.p.dim
    dim_uc = dim_c + pd.p_derived_perp.dim
    leaf_dim = dim_uc - pd.torus_rank
    if leaf_dim != 2 * dim_c:
        raise ParabolicAuditError(
            f"leaf dimension {leaf_dim} != 2 * {dim_c} for {pd.label()}")
    return DimensionReport(
        dim_g=pd.alg.dim, dim_p=pd.p.dim, dim_levi=pd.levi.dim,
        dim_u=pd.u.dim, dim_u_derived=pd.u_derived.dim,
        dim_p_derived=pd.p_derived.dim,
        dim_p_derived_perp=pd.p_derived_perp.dim,
        dim_a_p=pd.a_p.dim, dim_a_u=pd.a_u.dim, torus_rank=pd.torus_rank,
        dim_c=dim_c, dim_uc=dim_uc, leaf_dim=leaf_dim)


def _tangent(pd: ParabolicDatum, x: Vec) -> Subspace:
    eb = EchelonBuilder(pd.alg.dim)
    for row in pd.p.basis.row_list():
        v = pd.alg.bracket(row, x)
        if any(v):
            eb.insert(v)
    return eb.subspace()


def richardson_candidate(pd: ParabolicDatum, coeffs: Sequence[int]) -> Vec:
    v = [ZERO] * pd.alg.dim
    for c, k in zip(coeffs, pd.u_root_positions):
        v[k] = Fraction(c)
    return tuple(v)


def find_richardson(pd: ParabolicDatum, seed: int = 0,
                    max_retries: int = 32) -> RichardsonCertificate:
    """Element of u whose parabolic orbit is open in u.

    Tries the sum of all root vectors of u first; falls back to seeded
    random small integer coefficients.  Raises RichardsonSearchError with
    the best achieved tangent dimension if every retry fails.
    """
    want = pd.u
    best = -1
    rng = random.Random(f"richardson:{pd.label()}:{seed}")
    for attempt in range(max_retries + 1):
        if attempt == 0:
            coeffs: list[int] = [1] * len(pd.u_root_positions)
        else:
            coeffs = [rng.randint(1, 7) for _ in pd.u_root_positions]
        x = richardson_candidate(pd, coeffs)
        tangent = _tangent(pd, x)
        if tangent == want:
            return RichardsonCertificate(element=x, tangent=tangent, is_open=True)
        best = max(best, tangent.dim)
    raise RichardsonSearchError(
        f"no open orbit found for {pd.label()} after {max_retries} retries",
        best_tangent_dim=best)


def torus_character_set(pd: ParabolicDatum, x: Vec) -> TorusCharacterSet:
    """Distinct restricted weights of x's nonzero components."""
    keep = [i for i in range(pd.alg.rank) if (i + 1) not in pd.gamma]
    seen = set()
    for i, c in enumerate(x):
        if not c:
            continue
        w = pd.alg.basis_weights[i]
        if w is None:
            raise ValueError("vector has a component outside the root spaces")
        seen.add(tuple(w[k] for k in keep))
    rows = sorted(seen)
    return TorusCharacterSet(IntMat.from_rows(rows, len(keep)))


def torsor_certificate(pd: ParabolicDatum,
                       cert: RichardsonCertificate) -> TorsorCertificate:
    """Freeness evidence for the torus action on the open orbit.

    infinitesimal_free: the induced linear map p/[p,p] -> u/[u,u] sending a
    section z to the class of [z, x] has zero kernel.  lattice_generating:
    the Smith invariants of the restricted-weight matrix of x are all 1
    with rank equal to the torus rank, ruling out finite stabilizers that
    the linear check cannot see.
    """
    if not cert.is_open:
        raise ValueError("torsor certificate requires an open-orbit element")
    x = cert.element
    rows = []
    for i in range(pd.a_p.dim):
        z = pd.a_p.section.row(i)
        rows.append(class_of(pd.a_u, pd.alg.bracket(z, x)))
    induced_rank = span(rows, pd.a_u.dim).dim if rows else 0
    infinitesimal_free = induced_rank == pd.torus_rank

    charset = torus_character_set(pd, x)
    invariants, _, _ = smith_normal_form(charset.characters)
    lattice_generating = (len(invariants) == pd.torus_rank
                          and all(v == 1 for v in invariants))
    return TorsorCertificate(
        infinitesimal_free=infinitesimal_free,
        lattice_generating=lattice_generating,
        induced_rank=induced_rank,
        character_set=charset,
        smith_invariants=tuple(invariants))


def hypothesis_h1(pd: ParabolicDatum) -> bool:
    """Whether the derived Levi acts trivially on the abelianized nilradical.

    True iff [[l,l], u] lies inside [u,u].  This holds for gamma empty or
    full but fails for many intermediate gamma; callers that need it must
    gate on this flag rather than assume it.
    """
    moved = pd.alg.bracket_space(pd.levi_derived, pd.u)
    return pd.u_derived.contains_space(moved)


def h1_witness(pd: ParabolicDatum) -> tuple[str, str, Vec] | None:
    """A concrete basis pair violating the triviality hypothesis, if any."""
    alg = pd.alg
    for a in pd.levi_derived.basis.row_list():
        for b in pd.u.basis.row_list():
            v = alg.bracket(a, b)
            if any(v) and not pd.u_derived.contains(v):
                return alg.vector_name(a), alg.vector_name(b), v
    return None


def fixedpoint_check(pd: ParabolicDatum) -> bool:
    """Whether [p, [p,p]-perp] lands inside the nilradical."""
    moved = pd.alg.bracket_space(pd.p, pd.p_derived_perp)
    return pd.u.contains_space(moved)
