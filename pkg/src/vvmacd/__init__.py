"""Exact computations with vector-valued Macdonald polynomials.

Modules: ``qt_arith`` (rational functions and t-series), ``tableaux``
(combinatorics), ``hecke`` (Specht modules), ``daha`` (the induced module and
weight basis), ``symmetric`` (P_T and its scalars), ``pieri`` (e_r
coefficients), ``identities`` (product-sum identities), ``cli``.
"""

__version__ = "0.1.0"
