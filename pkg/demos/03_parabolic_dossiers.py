"""
Parabolic subalgebras and their dossiers
========================================

A subset of simple roots cuts out a standard parabolic p = l + u.  The
datum carries every derived object the twist family needs, with the
defining identities re-verified during construction.
"""
from liework.parabolic import dimension_report, standard_parabolic

# Gamma = {1, 3} inside B3: the Levi keeps roots supported on a1 and a3,
# the nilradical takes every other positive root space.
pd = standard_parabolic("B3", frozenset({1, 3}))
print("case", pd.label())
print("dim p =", pd.p.dim, " dim l =", pd.levi.dim, " dim u =", pd.u.dim)

# The Killing perp of p inside g is exactly the nilradical; that is the
# identity making p self-normalizing.
print("p-perp == u:", pd.p_perp == pd.u)

# [p,p] = [l,l] + u splits the derived algebra.
print("dim [p,p] =", pd.p_derived.dim, "= dim [l,l] + dim u =",
      pd.levi_derived.dim, "+", pd.u.dim)

# The universal torus of the family is the center direction count of l:
# rank minus |gamma|.
print("torus rank =", pd.torus_rank)

# The twist space [p,p]-perp / u pairs nondegenerately with a_p = p/[p,p];
# its dimension equals the torus rank.
print("twist dim =", pd.twist_space.dim, " a_p dim =", pd.a_p.dim)

# The dimension report assembles the family bookkeeping; the leaf
# dimension always lands at twice the codimension of p.
rep = dimension_report(pd)
print("dim C =", rep.dim_c, " dim U_C =", rep.dim_uc,
      " leaf =", rep.leaf_dim, "= 2 * dim C")

# Sweep all subsets of the simple roots of B3 and watch the torus rank
# drop as gamma grows.
print("\ngamma -> (dim p, dim u, torus rank, leaf)")
for k in range(8):
    gamma = frozenset(i + 1 for i in range(3) if k >> i & 1)
    q = standard_parabolic("B3", gamma)
    r = dimension_report(q)
    name = ",".join(str(i) for i in sorted(gamma)) or "-"
    print(f"  {name:<6} ({r.dim_p:2d}, {r.dim_u}, {r.torus_rank}, {r.leaf_dim:2d})")
