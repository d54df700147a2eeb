"""Exact Weyl group, torus, module and factorization computations."""
