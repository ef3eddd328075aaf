"""Exact adjoint-group actions and point-level models of the bundles.

Group elements are words in two kinds of generators: unipotent letters
exp(t ad_e) for a root vector e (an exact polynomial, since ad of a root
vector is nilpotent) and torus letters acting on each root space by a
rational monomial in the parameters.  Everything stays inside Fraction
arithmetic, so equivariance and invariance claims are checked exactly.

Four point types are modeled:
  UCPoint    (p, x) with x in the Killing-perp of [p, p]
  GCPoint    (p, x) with x in p
  BCPoint    (p, [x]) with [x] a class in the abelianized nilradical
             whose coset contains an open-orbit element
  TStarBCPoint  a BCPoint together with a covector y in [p, p]-perp

Transported points carry the group word that produced them; the twist
projection transports back through the inverse word.  Identifications
between twist spaces at different parabolics are recomputed from scratch
at the target subspace, so "the identity on stabilizing words" is a
verified fact rather than a definition.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chevalley import ChevalleyAlgebra, Root
from .exactlin import (
    QuotientSpace,
    Subspace,
    Vec,
    ZERO,
    class_of,
    perp_wrt_form,
    quotient,
    span,
)
from .parabolic import (
    ParabolicDatum,
    RichardsonCertificate,
    hypothesis_h1,
)


class PointInvariantError(ValueError):
    """A point's defining membership failed."""


class WitnessTransportError(RuntimeError):
    """Transport by the stored witness word left the expected space."""


class HypothesisNotSatisfied(RuntimeError):
    """An operation gated on a reported hypothesis was called where it fails."""


# ---------------------------------------------------------------------------
# group words


@dataclass(frozen=True)
class UnipotentLetter:
    root: Root
    t: Fraction

    def inverse(self) -> "UnipotentLetter":
        return UnipotentLetter(self.root, -self.t)


@dataclass(frozen=True)
class TorusLetter:
    params: tuple[Fraction, ...]

    def __post_init__(self):
        if any(p == 0 for p in self.params):
            raise ValueError("torus parameters must be nonzero")

    def inverse(self) -> "TorusLetter":
        return TorusLetter(tuple(Fraction(1) / p for p in self.params))


Letter = UnipotentLetter | TorusLetter


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...]

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(l.inverse() for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


IDENTITY_WORD = GroupWord(())


def concat(a: GroupWord, b: GroupWord) -> GroupWord:
    return GroupWord(a.letters + b.letters)


def word_of(*letters: Letter) -> GroupWord:
    return GroupWord(tuple(letters))


def _act_unipotent(alg: ChevalleyAlgebra, letter: UnipotentLetter, v: Vec) -> Vec:
    y = tuple(letter.t * c
              for c in alg.one_hot(alg.index_of_root_vector(letter.root)))
    acc = list(v)
    term = v
    k = 0
    while any(term):
        k += 1
        if k > alg.dim + 2:
            raise RuntimeError("exp(ad) of a root vector failed to terminate")
        term = tuple(c / k for c in alg.bracket(y, term))
        for i, c in enumerate(term):
            if c:
                acc[i] += c
    return tuple(acc)


def _act_torus(alg: ChevalleyAlgebra, letter: TorusLetter, v: Vec) -> Vec:
    if len(letter.params) != alg.rank:
        raise ValueError("torus letter has wrong parameter count")
    out = list(v)
    for i, c in enumerate(v):
        if not c:
            continue
        w = alg.basis_weights[i]
        if w is None:
            continue
        scale = Fraction(1)
        for j, e in enumerate(w):
            if e:
                scale *= letter.params[j] ** e
        out[i] = c * scale
    return tuple(out)


def act_vector(alg: ChevalleyAlgebra, w: GroupWord, v: Vec) -> Vec:
    """Adjoint action of the word on a vector; letters compose like a product,
    so the last letter acts first."""
    for letter in reversed(w.letters):
        if isinstance(letter, UnipotentLetter):
            v = _act_unipotent(alg, letter, v)
        else:
            v = _act_torus(alg, letter, v)
    return v


def act_subspace(alg: ChevalleyAlgebra, w: GroupWord, s: Subspace) -> Subspace:
    return span([act_vector(alg, w, row) for row in s.basis.row_list()],
                s.ambient_dim)


def killing_invariance_audit(alg: ChevalleyAlgebra, w: GroupWord,
                             pairs: Iterable[tuple[Vec, Vec]]) -> bool:
    for x, y in pairs:
        if alg.killing(act_vector(alg, w, x), act_vector(alg, w, y)) != \
                alg.killing(x, y):
            return False
    return True


def bracket_morphism_audit(alg: ChevalleyAlgebra, w: GroupWord,
                           pairs: Iterable[tuple[Vec, Vec]]) -> bool:
    for x, y in pairs:
        lhs = act_vector(alg, w, alg.bracket(x, y))
        rhs = alg.bracket(act_vector(alg, w, x), act_vector(alg, w, y))
        if lhs != rhs:
            return False
    return True


_T_CHOICES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
              Fraction(1, 2), Fraction(3), Fraction(-1, 2))
_PARAM_CHOICES = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2),
                  Fraction(-1), Fraction(2, 3), Fraction(5))


def random_word(alg: ChevalleyAlgebra, rng: random.Random, length: int,
                roots: Sequence[Root] | None = None,
                allow_torus: bool = True) -> GroupWord:
    """Deterministic word from the rng; unipotent letters use the given
    roots (default: all roots, both signs)."""
    if roots is None:
        roots = [r for r in alg.positive_roots] + [-r for r in alg.positive_roots]
    letters: list[Letter] = []
    for _ in range(length):
        if allow_torus and rng.random() < 0.25:
            letters.append(TorusLetter(
                tuple(rng.choice(_PARAM_CHOICES) for _ in range(alg.rank))))
        else:
            letters.append(UnipotentLetter(rng.choice(list(roots)),
                                           rng.choice(_T_CHOICES)))
    return GroupWord(tuple(letters))


def stabilizer_word(pd: ParabolicDatum, rng: random.Random,
                    length: int) -> GroupWord:
    """Word from generators of the parabolic subgroup: unipotent letters
    for roots of p (all positive roots plus negatives supported on gamma)
    and arbitrary torus letters.  Such words fix p as a subspace."""
    alg = pd.alg
    roots = [alg.positive_roots[k] for k in range(alg.num_positive)]
    roots += [-alg.positive_roots[k] for k in pd.levi_root_positions]
    return random_word(alg, rng, length, roots=roots)


# ---------------------------------------------------------------------------
# twist levels and the incidence family


@dataclass(frozen=True)
class TwistLevel:
    psi: Vec


def twist_level(pd: ParabolicDatum, coords: Sequence) -> TwistLevel:
    psi = tuple(Fraction(c) for c in coords)
    if len(psi) != pd.torus_rank:
        raise ValueError("twist level has wrong length")
    return TwistLevel(psi)


def zero_twist(pd: ParabolicDatum) -> TwistLevel:
    return TwistLevel((ZERO,) * pd.torus_rank)


def twist_section(pd: ParabolicDatum, psi: TwistLevel) -> Vec:
    """The canonical section representative of psi inside [p,p]-perp."""
    v = [ZERO] * pd.alg.dim
    for m, c in enumerate(psi.psi):
        if c:
            row = pd.twist_space.section.row(m)
            for i, r in enumerate(row):
                if r:
                    v[i] += c * r
    return tuple(v)


@dataclass(frozen=True)
class UCPoint:
    p: Subspace
    x: Vec
    witness: GroupWord


def _verify_uc_invariant(alg: ChevalleyAlgebra, p: Subspace, x: Vec) -> None:
    # recomputed from p alone: x must kill [p, p] under the Killing form
    pdp = perp_wrt_form(alg.bracket_space(p, p), alg.killing_gram)
    if not pdp.contains(x):
        raise PointInvariantError(
            "x is not Killing-orthogonal to [p, p] for its parabolic")


def make_uc_point(pd: ParabolicDatum, w: GroupWord, x0: Vec) -> UCPoint:
    """Transport (p_standard, x0) by w; the membership invariant is
    re-verified intrinsically at the transported subspace."""
    if not pd.p_derived_perp.contains(x0):
        raise PointInvariantError("x0 must lie in [p,p]-perp of the standard p")
    alg = pd.alg
    p = act_subspace(alg, w, pd.p)
    x = act_vector(alg, w, x0)
    _verify_uc_invariant(alg, p, x)
    return UCPoint(p=p, x=x, witness=w)


def act_uc_point(pd: ParabolicDatum, w: GroupWord, pt: UCPoint) -> UCPoint:
    alg = pd.alg
    p = act_subspace(alg, w, pt.p)
    x = act_vector(alg, w, pt.x)
    _verify_uc_invariant(alg, p, x)
    return UCPoint(p=p, x=x, witness=concat(w, pt.witness))


def mu_c(pt: UCPoint) -> Vec:
    return pt.x


def sigma_c(pt: UCPoint) -> Subspace:
    return pt.p


def pi_c(pd: ParabolicDatum, pt: UCPoint) -> TwistLevel:
    """Twist level of a point: transport x back to the standard parabolic
    through the witness inverse and take minus its class."""
    back = act_vector(pd.alg, pt.witness.inverse(), pt.x)
    if not pd.p_derived_perp.contains(back):
        raise WitnessTransportError(
            "witness inverse did not return x to the standard [p,p]-perp")
    cls = class_of(pd.twist_space, back)
    return TwistLevel(tuple(-c for c in cls))


@dataclass(frozen=True)
class IntrinsicQuotients:
    """Twist and torus quotients recomputed from a subspace alone."""

    p: Subspace
    nilradical: Subspace
    p_derived: Subspace
    p_derived_perp: Subspace
    twist: QuotientSpace
    a_p: QuotientSpace


@functools.lru_cache(maxsize=None)
def intrinsic_quotients(alg: ChevalleyAlgebra, p: Subspace) -> IntrinsicQuotients:
    """Everything pi/canonical-id needs, derived from the subspace p with no
    reference to how p was produced."""
    pder = alg.bracket_space(p, p)
    pdp = perp_wrt_form(pder, alg.killing_gram)
    nil = perp_wrt_form(p, alg.killing_gram)
    if not p.contains_space(nil):
        raise PointInvariantError("p-perp escaped p; p is not parabolic-like")
    return IntrinsicQuotients(
        p=p, nilradical=nil, p_derived=pder, p_derived_perp=pdp,
        twist=quotient(pdp, nil), a_p=quotient(p, pder))


def canonical_id(pd: ParabolicDatum, w: GroupWord, psi: TwistLevel) -> TwistLevel:
    """Transport a twist level to the parabolic act(w, p) and read its
    coordinates in the twist space rebuilt from scratch there.

    For words that merely stabilize p, the rebuilt space coincides with
    the standard one and the result is claimed (and suite-checked) to be
    psi itself.
    """
    alg = pd.alg
    y = twist_section(pd, psi)
    y2 = act_vector(alg, w, y)
    p2 = act_subspace(alg, w, pd.p)
    intr = intrinsic_quotients(alg, p2)
    if not intr.p_derived_perp.contains(y2):
        raise WitnessTransportError(
            "transported section left the target [p,p]-perp")
    return TwistLevel(class_of(intr.twist, y2))


def invariance_pairing_square(pd: ParabolicDatum, w: GroupWord,
                              psi: TwistLevel) -> tuple[Vec, Vec]:
    """Two routes around the transport square, as Killing pairings against
    the torus sections rebuilt at the transported parabolic.

    Route one pushes the twist section forward through w and pairs at the
    far side; route two pulls the far sections back through the inverse
    word and pairs at the standard side.  The suite asserts equality.
    """
    alg = pd.alg
    y = twist_section(pd, psi)
    y2 = act_vector(alg, w, y)
    p2 = act_subspace(alg, w, pd.p)
    intr = intrinsic_quotients(alg, p2)
    winv = w.inverse()
    far = tuple(alg.killing(intr.a_p.section.row(m), y2)
                for m in range(intr.a_p.dim))
    near = tuple(alg.killing(act_vector(alg, winv, intr.a_p.section.row(m)), y)
                 for m in range(intr.a_p.dim))
    return far, near


def fiber_dimension(pd: ParabolicDatum, psi: TwistLevel) -> int:
    """Dimension of the twist-projection fiber over psi.

    The fiber over the standard parabolic is an affine translate of the
    nilradical inside [p,p]-perp, and the whole fiber adds dim C base
    directions; the result is independent of psi and equals 2 dim C.
    """
    if len(psi.psi) != pd.torus_rank:
        raise ValueError("twist level has wrong length")
    # a particular solution exists for every psi: the section of -psi
    particular = twist_section(pd, TwistLevel(tuple(-c for c in psi.psi)))
    got = class_of(pd.twist_space, particular)
    if got != tuple(-c for c in psi.psi):
        raise RuntimeError("section failed to solve the class equation")
    dim_c = pd.alg.dim - pd.p.dim
    solutions = pd.u.dim  # translates of the divisor inside [p,p]-perp
    out = solutions + dim_c
    if out != 2 * dim_c:
        raise RuntimeError("fiber dimension bookkeeping failed")
    return out


# ---------------------------------------------------------------------------
# the partial resolution family


@dataclass(frozen=True)
class GCPoint:
    p: Subspace
    x: Vec
    witness: GroupWord


def make_gc_point(alg: ChevalleyAlgebra, p: Subspace, x: Vec,
                  witness: GroupWord = IDENTITY_WORD) -> GCPoint:
    if not p.contains(x):
        raise PointInvariantError("x must lie in p")
    return GCPoint(p=p, x=x, witness=witness)


def embed(pd: ParabolicDatum, pt: UCPoint) -> GCPoint:
    """Inclusion of the incidence family into the resolution family; the
    content is the membership x in p, which holds because [p,p]-perp is
    contained in p (re-verified per point, not assumed)."""
    return make_gc_point(pd.alg, pt.p, pt.x, pt.witness)


def phi_c(pt: GCPoint) -> Vec:
    return pt.x


def act_gc_point(alg: ChevalleyAlgebra, w: GroupWord, pt: GCPoint) -> GCPoint:
    return make_gc_point(alg, act_subspace(alg, w, pt.p),
                         act_vector(alg, w, pt.x), concat(w, pt.witness))


# ---------------------------------------------------------------------------
# the torus-bundle model (gated on the triviality hypothesis)


@dataclass(frozen=True)
class BCPoint:
    p: Subspace
    x_rep: Vec
    witness: GroupWord


def _coset_contains_open(pd: ParabolicDatum, x_rep: Vec, seed: int = 0,
                         samples: int = 16) -> bool:
    """Generic test that x_rep + [u,u] meets the open orbit piece."""
    alg = pd.alg
    want = pd.u
    rng = random.Random(f"coset:{pd.label()}:{seed}")
    offsets: list[Vec] = [tuple([ZERO] * alg.dim)]
    rows = pd.u_derived.basis.row_list()
    for _ in range(samples - 1):
        v = [ZERO] * alg.dim
        for row in rows:
            c = Fraction(rng.randint(-3, 3))
            if c:
                for i, r in enumerate(row):
                    if r:
                        v[i] += c * r
        offsets.append(tuple(v))
    for off in offsets:
        cand = tuple(a + b for a, b in zip(x_rep, off))
        rows_t = [alg.bracket(row, cand) for row in pd.p.basis.row_list()]
        if span(rows_t, alg.dim) == want:
            return True
    return False


def make_bc_point(pd: ParabolicDatum, cert: RichardsonCertificate,
                  w: GroupWord = IDENTITY_WORD) -> BCPoint:
    """Torus-bundle point from an open-orbit certificate, transported by w.

    Gated on the reported triviality hypothesis for this gamma; raises
    HypothesisNotSatisfied (not an invariant violation) when it fails.
    """
    if not hypothesis_h1(pd):
        raise HypothesisNotSatisfied(
            f"hypothesis not satisfied for gamma of {pd.label()}; "
            "the bundle model is only claimed under it")
    if not pd.u.contains(cert.element):
        raise PointInvariantError("representative must lie in the nilradical")
    if not _coset_contains_open(pd, cert.element):
        raise PointInvariantError(
            "coset of the representative misses the open orbit")
    return BCPoint(p=act_subspace(pd.alg, w, pd.p),
                   x_rep=act_vector(pd.alg, w, cert.element),
                   witness=w)


def bc_torus_action(pd: ParabolicDatum, pt: BCPoint,
                    params: Sequence) -> BCPoint:
    """Action of an adjoint-torus point on a bundle point: the class
    representative moves by the inverse torus letter."""
    letter = TorusLetter(tuple(Fraction(c) for c in params)).inverse()
    moved = act_vector(pd.alg, GroupWord((letter,)), pt.x_rep)
    return BCPoint(p=pt.p, x_rep=moved, witness=pt.witness)


@dataclass(frozen=True)
class TStarBCPoint:
    base: BCPoint
    y: Vec


def make_tstar_point(pd: ParabolicDatum, base: BCPoint, y: Vec) -> TStarBCPoint:
    _verify_uc_invariant(pd.alg, base.p, y)
    return TStarBCPoint(base=base, y=y)


def nu_g(pt: TStarBCPoint) -> Vec:
    return pt.y


def quotient_to_uc(pd: ParabolicDatum, pt: TStarBCPoint) -> UCPoint:
    """Forget the class part: ((p, [x]), y) becomes (p, y)."""
    _verify_uc_invariant(pd.alg, pt.base.p, pt.y)
    return UCPoint(p=pt.base.p, x=pt.y, witness=pt.base.witness)


def nu_t(pd: ParabolicDatum, pt: TStarBCPoint) -> TwistLevel:
    return pi_c(pd, quotient_to_uc(pd, pt))
