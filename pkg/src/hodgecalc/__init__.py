"""hodgecalc: exact computation of Hodge ideals of reduced polynomial
divisors through Weyl-algebra Groebner bases, with independent
verification oracles."""

__version__ = "0.1.0"
