"""
Exact rational linear algebra
=============================

Everything downstream rests on arithmetic in Q: row reduction without
rounding, canonical subspaces, quotients with chosen sections, and Smith
normal form over Z.
"""
from fractions import Fraction

from liework.exactlin import (
    IntMat, Mat, class_of, intersect, kernel, quotient, rref,
    smith_normal_form, span, subspace_sum,
)

# A matrix over Q is a frozen value; rref returns the reduced form and the
# pivot columns.  No epsilon anywhere: 1/3 stays 1/3.
m = Mat.from_rows([[1, 2, 3], [2, 4, 7], [1, 2, 4]])
r, pivots = rref(m)
print("rref pivots:", pivots)
print("rref row 0:", r.row(0))

# Subspaces are canonical: two spans of the same space compare equal.
a = span([[1, 0, 1], [0, 1, 1]], 3)
b = span([[1, 1, 2], [1, -1, 0]], 3)
print("same plane:", a == b)

# Sum and intersection come from echelon bookkeeping, not numerics.
line = intersect(a, span([[1, 0, 1], [0, 0, 1]], 3))
print("intersection dim:", line.dim, "basis:", line.basis.row_list())
print("sum dim:", subspace_sum(a, span([[0, 0, 1]], 3)).dim)

# Kernels are exact too.
k = kernel(Mat.from_rows([[1, 2, 0], [0, 0, 1]]))
print("kernel basis:", k.basis.row_list())

# Quotients carry a deterministic section; class_of returns coordinates of
# a vector's class in that section basis.
q = quotient(span([[1, 0, 0], [0, 1, 0]], 3), span([[1, 1, 0]], 3))
print("quotient dim:", q.dim)
print("class of (1, 0, 0):", class_of(q, [1, 0, 0]))
print("class of (1, 1, 0):", class_of(q, [1, 1, 0]))

# Fractions propagate exactly through solves.
third = Mat.from_rows([[Fraction(1, 3)]])
print("1/3 rref:", rref(third)[0].row(0))

# Over Z, Smith normal form certifies lattice properties: the diagonal
# invariants of this matrix say its rows generate a full sublattice of
# index 2.
snf, u, v = smith_normal_form(IntMat.from_rows([[2, 0], [0, 1]]))
print("smith invariants:", snf)
