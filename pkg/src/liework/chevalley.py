"""Root systems and Chevalley bases for types A1-A3, B2, B3, C3, D4, G2.

The basis is constructed inside an exact matrix realization: traceless
matrices for type A, orthogonal/symplectic algebras for an antidiagonal
form for types B/C/D, and the triality-invariant subalgebra of so(8) for
G2.  Non-simple root vectors are defined inductively through extraspecial
pairs (processed in height-then-reverse-lex order, with the +(p+1) sign
choice), which pins every structure constant deterministically.

Nothing is trusted: after extraction the construction audits the Jacobi
identity on every ordered basis triple, the +-(p+1) magnitude law for all
root pairs, coroot integrality against the symmetrized Cartan matrix,
Killing form symmetry/invariance/nondegeneracy, and the weight grading of
the Killing pairing.  Any failed audit raises, naming the identity.

Basis order is [e_beta for beta positive] ++ [h_1..h_r] ++ [f_beta], with
positive roots sorted by height then reverse-lexicographically on their
simple-root coordinates, so a1 precedes a2.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    EchelonBuilder,
    IntMat,
    Mat,
    Subspace,
    Vec,
    ZERO,
    rref,
    solve_linear,
)


class UnsupportedType(ValueError):
    """Type label outside the supported list."""


class NotFiniteType(ValueError):
    """Cartan matrix is not of finite type."""


class ConstructionAuditError(RuntimeError):
    """An exhaustive post-construction audit failed; names the identity."""


SUPPORTED_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2")


@dataclass(frozen=True)
class Root:
    """A root as integer coordinates over the simple roots.

    Coordinates are all >= 0 (positive root) or all <= 0 (negative root);
    mixed signs are rejected.
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        pos = any(c > 0 for c in self.coords)
        neg = any(c < 0 for c in self.coords)
        if (pos and neg) or not (pos or neg):
            raise ValueError("root coordinates must be nonzero and of one sign")

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return self.coords[0] >= 0 and any(c > 0 for c in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))


def root_sort_key(root: Root):
    # height first; ties broken so a1 sorts before a2
    return (root.height, tuple(-c for c in root.coords))


def root_name(coords: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        terms.append(f"a{i + 1}" if c == 1 else f"{c}a{i + 1}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class CartanDatum:
    """A type label together with its Cartan matrix.

    Entry (i, j) is <alpha_j, alpha_i-coroot>, i.e. alpha_j evaluated on
    the i-th simple coroot; row i lists the pairings against coroot i.
    """

    type_label: str
    matrix: IntMat

    @property
    def rank(self) -> int:
        return self.matrix.rows


def _chain_matrix(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _cartan_rows(letter: str, n: int) -> list[list[int]]:
    if letter == "A":
        return _chain_matrix(n)
    if letter == "B":  # last simple root short
        a = _chain_matrix(n)
        a[n - 1][n - 2] = -2
        return a
    if letter == "C":  # last simple root long
        a = _chain_matrix(n)
        a[n - 2][n - 1] = -2
        return a
    if letter == "D":
        a = _chain_matrix(n)
        a[n - 1][n - 2] = 0
        a[n - 2][n - 1] = 0
        a[n - 3][n - 1] = -1
        a[n - 1][n - 3] = -1
        return a
    if letter == "G":
        return [[2, -3], [-1, 2]]
    raise UnsupportedType(f"unknown series letter {letter!r}")


def cartan_datum(type_label: str) -> CartanDatum:
    """Cartan datum for a supported type label such as 'A2' or 'G2'."""
    if type_label not in SUPPORTED_TYPES:
        raise UnsupportedType(
            f"type label {type_label!r} not in supported set {SUPPORTED_TYPES}")
    letter, n = type_label[0], int(type_label[1:])
    m = IntMat.from_rows(_cartan_rows(letter, n), n)
    validate_finite_type(m)
    return CartanDatum(type_label, m)


def symmetrizer(m: IntMat) -> tuple[Fraction, ...]:
    """Positive rationals d with d_i m[i][j] = d_j m[j][i], short roots at 1.

    (alpha_i, alpha_i) = 2 d_i once normalized.  Raises NotFiniteType if no
    consistent symmetrizer exists.
    """
    n = m.rows
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or m[i, j] == 0:
                    continue
                if m[j, i] == 0:
                    raise NotFiniteType("asymmetric zero pattern in Cartan matrix")
                want = d[i] * Fraction(m[i, j], m[j, i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
    lo = min(d)  # type: ignore[type-var]
    return tuple(x / lo for x in d)  # type: ignore[union-attr]


def validate_finite_type(m: IntMat) -> None:
    """Reject matrices that are not finite-type Cartan matrices."""
    n = m.rows
    if m.rows != m.cols or n == 0:
        raise NotFiniteType("Cartan matrix must be square and nonempty")
    for i in range(n):
        if m[i, i] != 2:
            raise NotFiniteType("diagonal Cartan entries must equal 2")
        for j in range(n):
            if i != j and m[i, j] > 0:
                raise NotFiniteType("off-diagonal Cartan entries must be <= 0")
    d = symmetrizer(m)
    # symmetrized matrix must be positive definite (leading principal minors)
    s = [[d[i] * m[i, j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        sub = Mat.from_rows([row[:k] for row in s[:k]], k)
        if _rational_det(sub) <= 0:
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")


def _rational_det(m: Mat) -> Fraction:
    a = [list(m.row(i)) for i in range(m.rows)]
    n = m.rows
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = Fraction(1) / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


_EXPECTED_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G": lambda n: 6,
}


def roots_from_cartan(cartan: CartanDatum) -> tuple[Root, ...]:
    """All positive roots, by closing the simple roots under root strings."""
    n = cartan.rank
    a = cartan.matrix
    validate_finite_type(a)

    def pairing(coords: tuple[int, ...], i: int) -> int:
        return sum(coords[j] * a[i, j] for j in range(n))

    known: set[tuple[int, ...]] = set()
    simples = []
    for i in range(n):
        c = tuple(1 if j == i else 0 for j in range(n))
        known.add(c)
        simples.append(c)
    frontier = list(simples)
    height = 1
    while frontier:
        height += 1
        if height > 100:
            raise NotFiniteType("root closure did not terminate")
        nxt = set()
        for beta in frontier:
            for i, alpha in enumerate(simples):
                # p = how far the string continues downward from beta
                p = 0
                probe = tuple(b - alpha[j] for j, b in enumerate(beta))
                while probe in known:
                    p += 1
                    probe = tuple(x - alpha[j] for j, x in enumerate(probe))
                if p - pairing(beta, i) > 0:
                    up = tuple(b + alpha[j] for j, b in enumerate(beta))
                    if up not in known:
                        nxt.add(up)
        known |= nxt
        frontier = sorted(nxt)
    roots = sorted((Root(c) for c in known), key=root_sort_key)
    letter = cartan.type_label[0] if cartan.type_label in SUPPORTED_TYPES else None
    if letter is not None:
        want = _EXPECTED_POSITIVE_COUNT[letter](cartan.rank)
        if len(roots) != want:
            raise ConstructionAuditError(
                f"positive root count {len(roots)} != classical count {want} "
                f"for {cartan.type_label}")
    return tuple(roots)


# ---------------------------------------------------------------------------
# matrix realizations of the Chevalley generators


def _unit(m: int, i: int, j: int) -> Mat:
    """E_ij, 1-based indices."""
    return Mat(m, m, tuple(Fraction(1) if (r == i - 1 and c == j - 1) else ZERO
                           for r in range(m) for c in range(m)))


def _anti(m: int, i: int, j: int) -> Mat:
    """E_ij - E_{m+1-j, m+1-i}: antisymmetric for the antidiagonal form."""
    return _unit(m, i, j).sub(_unit(m, m + 1 - j, m + 1 - i))


def _commutator(x: Mat, y: Mat) -> Mat:
    return (x @ y).sub(y @ x)


def _matrix_generators(type_label: str) -> tuple[list[Mat], list[Mat], int]:
    """Serre generator matrices (e_i, f_i) for the given type."""
    letter, n = type_label[0], int(type_label[1:])
    if letter == "A":
        m = n + 1
        es = [_unit(m, i, i + 1) for i in range(1, n + 1)]
        fs = [_unit(m, i + 1, i) for i in range(1, n + 1)]
        return es, fs, m
    if letter == "B":
        m = 2 * n + 1
        es = [_anti(m, i, i + 1) for i in range(1, n + 1)]
        fs = [_anti(m, i + 1, i) for i in range(1, n)]
        fs.append(_anti(m, n + 1, n).scale(2))  # short-root normalization
        return es, fs, m
    if letter == "C":
        m = 2 * n
        es = [_unit(m, i, i + 1).sub(_unit(m, 2 * n - i, 2 * n + 1 - i))
              for i in range(1, n)]
        es.append(_unit(m, n, n + 1))
        fs = [_unit(m, i + 1, i).sub(_unit(m, 2 * n + 1 - i, 2 * n - i))
              for i in range(1, n)]
        fs.append(_unit(m, n + 1, n))
        return es, fs, m
    if letter == "D":
        m = 2 * n
        es = [_anti(m, i, i + 1) for i in range(1, n)]
        es.append(_anti(m, n - 1, n + 1))
        fs = [_anti(m, i + 1, i) for i in range(1, n)]
        fs.append(_anti(m, n + 1, n - 1))
        return es, fs, m
    if letter == "G":
        # triality-invariant subalgebra of so(8): the outer-node orbit of the
        # D4 diagram folds onto the short simple root, the center stays long
        d_es, d_fs, m = _matrix_generators("D4")
        e_short = d_es[0].add(d_es[2]).add(d_es[3])
        f_short = d_fs[0].add(d_fs[2]).add(d_fs[3])
        return [e_short, d_es[1]], [f_short, d_fs[1]], m
    raise UnsupportedType(f"no matrix realization for {type_label!r}")


# ---------------------------------------------------------------------------
# the algebra


@dataclass(frozen=True, eq=False)
class ChevalleyAlgebra:
    """A semisimple Lie algebra over Q in a Chevalley basis.

    Vectors are coordinate tuples over the basis; all brackets go through
    the audited structure-constant table.
    """

    cartan: CartanDatum
    positive_roots: tuple[Root, ...]
    dim: int
    table: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...] = field(repr=False)
    killing_gram: Mat = field(repr=False)
    basis_weights: tuple[tuple[int, ...] | None, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    # --- indexing -----------------------------------------------------
    def e_index(self, root: Root) -> int:
        return self._pos_index()[root.coords]

    def f_index(self, root: Root) -> int:
        return self.num_positive + self.rank + self._pos_index()[root.coords]

    def h_index(self, i: int) -> int:
        """Coroot basis index for the 1-based simple root index i."""
        if not 1 <= i <= self.rank:
            raise ValueError("simple root index out of range")
        return self.num_positive + i - 1

    @functools.lru_cache(maxsize=None)
    def _pos_index(self) -> dict[tuple[int, ...], int]:
        return {r.coords: k for k, r in enumerate(self.positive_roots)}

    def index_of_root_vector(self, root: Root) -> int:
        """Basis index of e_root for positive root, f_{-root} for negative."""
        if root.is_positive:
            return self.e_index(root)
        return self.f_index(-root)

    def basis_label(self, i: int) -> str:
        n, r = self.num_positive, self.rank
        if i < n:
            return f"e({root_name(self.positive_roots[i].coords)})"
        if i < n + r:
            return f"h{i - n + 1}"
        return f"f({root_name(self.positive_roots[i - n - r].coords)})"

    def one_hot(self, i: int) -> Vec:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    # --- operations ----------------------------------------------------
    def bracket(self, x: Vec, y: Vec) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        acc = [ZERO] * self.dim
        tab = self.table
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = tab[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in row[j]:
                    acc[k] += c * xi * yj
        return tuple(acc)

    def ad(self, x: Vec) -> Mat:
        cols = [self.bracket(x, self.one_hot(j)) for j in range(self.dim)]
        return Mat.from_rows([[cols[j][i] for j in range(self.dim)]
                              for i in range(self.dim)], self.dim)

    def killing(self, x: Vec, y: Vec) -> Fraction:
        acc = ZERO
        g = self.killing_gram
        for i, xi in enumerate(x):
            if xi:
                row = g.row(i)
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        acc += xi * row[j] * yj
        return acc

    def bracket_space(self, a: Subspace, b: Subspace) -> Subspace:
        """span{[x, y] : x in a, y in b}"""
        eb = EchelonBuilder(self.dim)
        rows_a = a.basis.row_list()
        rows_b = b.basis.row_list()
        for x in rows_a:
            for y in rows_b:
                v = self.bracket(x, y)
                if any(v):
                    eb.insert(v)
        return eb.subspace()

    def vector_name(self, v: Vec) -> str:
        terms = []
        for i, c in enumerate(v):
            if c:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coef}{self.basis_label(i)}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _string_down_length(gamma: tuple[int, ...], beta: tuple[int, ...],
                        signed: set[tuple[int, ...]]) -> int:
    """Largest p with gamma - p*beta still a root."""
    p = 0
    probe = tuple(g - b for g, b in zip(gamma, beta))
    while probe in signed:
        p += 1
        probe = tuple(x - b for x, b in zip(probe, beta))
    return p


def build_algebra(cartan: CartanDatum) -> ChevalleyAlgebra:
    """Construct the algebra and run every audit; raises on any failure."""
    label = cartan.type_label
    n = cartan.rank
    a = cartan.matrix
    pos = roots_from_cartan(cartan)
    pos_set = {r.coords for r in pos}
    signed = pos_set | {tuple(-c for c in r.coords) for r in pos}
    num_pos = len(pos)
    dim = 2 * num_pos + n

    es, fs, msize = _matrix_generators(label)
    hs = [_commutator(es[i], fs[i]) for i in range(n)]

    # observed Cartan integers must match the declared matrix
    for i in range(n):
        for j in range(n):
            want = es[j].scale(a[i, j])
            if _commutator(hs[i], es[j]) != want:
                raise ConstructionAuditError(
                    f"{label}: [h{i+1}, e{j+1}] != A[{i+1}][{j+1}] e{j+1}")

    simple_roots = [Root(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    simple_order = sorted(range(n), key=lambda i: root_sort_key(simple_roots[i]))

    e_mat: dict[tuple[int, ...], Mat] = {}
    f_mat: dict[tuple[int, ...], Mat] = {}
    for i in range(n):
        e_mat[simple_roots[i].coords] = es[i]
        f_mat[simple_roots[i].coords] = fs[i]
    for delta in pos:
        if delta.height == 1:
            continue
        beta0 = None
        for i in simple_order:
            rem = tuple(d - c for d, c in zip(delta.coords, simple_roots[i].coords))
            if rem in pos_set:
                beta0 = simple_roots[i].coords
                gamma0 = rem
                break
        if beta0 is None:
            raise ConstructionAuditError(
                f"{label}: no simple summand for {root_name(delta.coords)}")
        p = _string_down_length(gamma0, beta0, signed)
        c = Fraction(1, p + 1)
        ed = _commutator(e_mat[beta0], e_mat[gamma0]).scale(c)
        fd = _commutator(f_mat[beta0], f_mat[gamma0]).scale(-c)
        if ed.is_zero() or fd.is_zero():
            raise ConstructionAuditError(
                f"{label}: root vector for {root_name(delta.coords)} collapsed")
        e_mat[delta.coords] = ed
        f_mat[delta.coords] = fd

    basis: list[Mat] = [e_mat[r.coords] for r in pos] + hs + [f_mat[r.coords] for r in pos]
    weights: list[tuple[int, ...] | None] = (
        [r.coords for r in pos] + [None] * n + [tuple(-c for c in r.coords) for r in pos])

    # deterministic solver data for the (diagonal) Cartan part
    h_diag_cols = Mat.from_rows(
        [[hs[k][i, i] for k in range(n)] for i in range(msize)], n)

    pos_idx = {r.coords: k for k, r in enumerate(pos)}

    def target_index(w: tuple[int, ...]) -> int | None:
        if w in pos_set:
            return pos_idx[w]
        neg = tuple(-x for x in w)
        if neg in pos_set:
            return num_pos + n + pos_idx[neg]
        return None

    def express_single(cmat: Mat, k: int, ctx: str) -> Fraction:
        b = basis[k]
        pivot = next(i for i, x in enumerate(b.entries) if x)
        coef = cmat.entries[pivot] / b.entries[pivot]
        if b.scale(coef) != cmat:
            raise ConstructionAuditError(
                f"{label}: bracket {ctx} is not a multiple of its root vector")
        return coef

    # structure constants, using the weight grading to locate targets
    empty: tuple = ()
    table: list[list[tuple[tuple[int, Fraction], ...]]] = [
        [empty] * dim for _ in range(dim)]

    def set_entry(i: int, j: int, terms: list[tuple[int, Fraction]]):
        terms = [(k, c) for k, c in terms if c]
        table[i][j] = tuple(terms)
        table[j][i] = tuple((k, -c) for k, c in terms)

    symm = symmetrizer(a)
    s_form = [[symm[i] * a[i, j] for j in range(n)] for i in range(n)]

    def norm_sq(coords: Sequence[int]) -> Fraction:
        acc = Fraction(0)
        for i, ci in enumerate(coords):
            if ci:
                for j, cj in enumerate(coords):
                    if cj:
                        acc += ci * cj * s_form[i][j]
        return acc

    for i in range(dim):
        for j in range(i + 1, dim):
            cmat = _commutator(basis[i], basis[j])
            wi, wj = weights[i], weights[j]
            if wi is None and wj is None:
                if not cmat.is_zero():
                    raise ConstructionAuditError(f"{label}: Cartan part not abelian")
                set_entry(i, j, [])
                continue
            if wi is None or wj is None:
                hpos = i if wi is None else j
                vpos = j if wi is None else i
                w = weights[vpos]
                assert w is not None
                expect = sum(w[k] * a[hpos - num_pos, k] for k in range(n))
                if cmat.is_zero():
                    if expect != 0:
                        raise ConstructionAuditError(
                            f"{label}: vanishing [h, x] with nonzero weight pairing")
                    set_entry(i, j, [])
                    continue
                coef = express_single(cmat, vpos,
                                      f"[{_lbl(label, i, pos, n)},{_lbl(label, j, pos, n)}]")
                want = expect if wi is None else -expect
                if coef != want:
                    raise ConstructionAuditError(
                        f"{label}: Cartan action disagrees with declared pairing")
                set_entry(i, j, [(vpos, coef)])
                continue
            s = tuple(x + y for x, y in zip(wi, wj))
            if all(x == 0 for x in s):
                # opposite root vectors: lands in the Cartan subalgebra
                for r_ in range(msize):
                    for c_ in range(msize):
                        if r_ != c_ and cmat[r_, c_] != 0:
                            raise ConstructionAuditError(
                                f"{label}: [e,f] for opposite roots not diagonal")
                diag = tuple(cmat[t, t] for t in range(msize))
                coords = solve_linear(h_diag_cols, diag)
                if coords is None:
                    raise ConstructionAuditError(
                        f"{label}: [e,f] outside the Cartan subalgebra")
                # audit: must be the integral coroot of the positive root
                posw = wi if any(x > 0 for x in wi) else wj
                nsq = norm_sq(posw)
                for k in range(n):
                    expect_k = Fraction(posw[k]) * 2 * symm[k] / nsq
                    # orientation: [e_b, f_b] = h_b when e comes first
                    got = coords[k] if weights[i] == posw else -coords[k]
                    if got != expect_k or got.denominator != 1:
                        raise ConstructionAuditError(
                            f"{label}: coroot of {root_name(posw)} is not the "
                            f"expected integral vector")
                set_entry(i, j, [(num_pos + k, coords[k]) for k in range(n)])
                continue
            k = target_index(s)
            if k is None:
                if not cmat.is_zero():
                    raise ConstructionAuditError(
                        f"{label}: bracket created a non-root weight {s}")
                set_entry(i, j, [])
                continue
            if cmat.is_zero():
                raise ConstructionAuditError(
                    f"{label}: vanished bracket for root sum {root_name(s)}")
            coef = express_single(cmat, k, f"targets {root_name(s)}")
            if coef.denominator != 1:
                raise ConstructionAuditError(
                    f"{label}: non-integral structure constant {coef}")
            p = _string_down_length(wj, wi, signed)
            if abs(coef) != p + 1:
                raise ConstructionAuditError(
                    f"{label}: |N| = {abs(coef)} violates the (p+1) law "
                    f"(p = {p}) for {root_name(wi)}, {root_name(wj)}")
            set_entry(i, j, [(k, coef)])

    tab = tuple(tuple(row) for row in table)

    # sparse ad for the Killing form
    sparse_ad: list[dict[tuple[int, int], Fraction]] = []
    for i in range(dim):
        d: dict[tuple[int, int], Fraction] = {}
        for j in range(dim):
            for k, c in tab[i][j]:
                d[(k, j)] = c
        sparse_ad.append(d)
    gram_rows = []
    for i in range(dim):
        di = sparse_ad[i]
        row = [ZERO] * dim
        for j in range(dim):
            dj = sparse_ad[j]
            acc = ZERO
            for (r_, c_), v in di.items():
                w = dj.get((c_, r_))
                if w is not None:
                    acc += v * w
            row[j] = acc
        gram_rows.append(row)
    gram = Mat.from_rows(gram_rows, dim)

    alg = ChevalleyAlgebra(cartan=cartan, positive_roots=pos, dim=dim,
                           table=tab, killing_gram=gram,
                           basis_weights=tuple(weights))
    _audit(alg)
    return alg


def _lbl(label: str, i: int, pos, n: int) -> str:
    num_pos = len(pos)
    if i < num_pos:
        return f"e({root_name(pos[i].coords)})"
    if i < num_pos + n:
        return f"h{i - num_pos + 1}"
    return f"f({root_name(pos[i - num_pos - n].coords)})"


def jacobi_violations(alg: ChevalleyAlgebra) -> int:
    """Count of ordered basis triples violating the Jacobi identity."""
    dim = alg.dim
    tab = alg.table
    bad = 0
    for x in range(dim):
        tx = tab[x]
        for y in range(dim):
            txy = tx[y]
            ty = tab[y]
            for z in range(dim):
                acc: dict[int, Fraction] = {}
                for k, c in txy:
                    for l, d in tab[k][z]:
                        acc[l] = acc.get(l, ZERO) + c * d
                for k, c in ty[z]:
                    for l, d in tab[k][x]:
                        acc[l] = acc.get(l, ZERO) + c * d
                for k, c in tab[z][x]:
                    for l, d in tab[k][y]:
                        acc[l] = acc.get(l, ZERO) + c * d
                if any(v != 0 for v in acc.values()):
                    bad += 1
    return bad


def killing_invariance_violations(alg: ChevalleyAlgebra) -> int:
    """Ordered triples with kappa([z,x],y) + kappa(x,[z,y]) != 0."""
    dim = alg.dim
    tab = alg.table
    g = alg.killing_gram
    bad = 0
    for z in range(dim):
        tz = tab[z]
        for x in range(dim):
            tzx = tz[x]
            for y in range(dim):
                acc = ZERO
                for k, c in tzx:
                    acc += c * g[k, y]
                for k, c in tz[y]:
                    acc += g[x, k] * c
                if acc != 0:
                    bad += 1
    return bad


def _audit(alg: ChevalleyAlgebra) -> None:
    label = alg.cartan.type_label
    dim = alg.dim
    g = alg.killing_gram
    if not g.is_symmetric():
        raise ConstructionAuditError(f"{label}: Killing gram not symmetric")
    if len(rref(g)[1]) != dim:
        raise ConstructionAuditError(f"{label}: Killing form degenerate")
    # weight grading of the pairing: kappa(g_a, g_b) = 0 unless a + b = 0
    for i in range(dim):
        wi = alg.basis_weights[i]
        for j in range(dim):
            wj = alg.basis_weights[j]
            zero_sum = (
                (wi is None and wj is None)
                or (wi is not None and wj is not None
                    and all(x + y == 0 for x, y in zip(wi, wj))))
            if not zero_sum and g[i, j] != 0:
                raise ConstructionAuditError(
                    f"{label}: Killing pairing breaks the weight grading")
    if jacobi_violations(alg) != 0:
        raise ConstructionAuditError(f"{label}: Jacobi identity audit failed")
    if killing_invariance_violations(alg) != 0:
        raise ConstructionAuditError(f"{label}: Killing invariance audit failed")


@functools.lru_cache(maxsize=None)
def algebra(type_label: str) -> ChevalleyAlgebra:
    """Cached audited algebra for a supported type label."""
    return build_algebra(cartan_datum(type_label))
