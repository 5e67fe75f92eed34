# Polynomials module
