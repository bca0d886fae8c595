"""
Utility modules for NAQ
"""
