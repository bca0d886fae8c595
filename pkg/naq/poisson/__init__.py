"""
Bivector fields, Poisson brackets, Jacobiators and bracket-level identities
"""
