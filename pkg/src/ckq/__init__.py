"""Exact verification engine for two-parameter Cayley-Klein quantum groups.

The package constructs the quantum function algebras, their dual quantum
algebras and the related orthogonal Hopf algebras over a dual-number
coefficient ring, and checks the defining identities (RTT, Yang-Baxter,
Hopf axioms, duality pairings, isomorphisms, contractions) with exact
truncated-series arithmetic.
"""

__version__ = "0.1.0"
