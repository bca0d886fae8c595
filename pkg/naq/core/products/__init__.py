"""
Star product families
"""
