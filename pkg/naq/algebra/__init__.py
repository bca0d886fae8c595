"""
Exact polynomial algebra: rationals, polynomials, lambda-series and differential operators
"""
