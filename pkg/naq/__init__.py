"""
NAQ - exact workbench for nearly associative deformation quantization
"""

__version__ = '0.1.0'
