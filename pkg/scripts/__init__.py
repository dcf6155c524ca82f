"""
baxterq - exact Baxter Q-function hierarchies for U_q(gl(M|N))

Builds the 2^(M+N) Q-functions of a twisted spin chain in exact rational arithmetic
and checks their functional relations (QQ relations, Wronskian T-functions, the
T-system, Backlund flows, Baxter equations, conserved quantities, supercharacters).
"""

from .baxterq import main

__version__ = "1.0.0"

__all__ = ["main"]
