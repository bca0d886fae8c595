"""
Associator, identity catalogue and the monomial certificate engine
"""
