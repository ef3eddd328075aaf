"""liework: exact-arithmetic workbench for semisimple Lie algebras.

Builds Chevalley bases from Cartan matrices, parabolic subalgebras with
their quotient tori, Richardson elements with freeness certificates, and
the incidence/family constructions on top of them, then verifies the
expected identities with exact rational arithmetic.
"""

__version__ = "0.1.0"
