"""
Session orchestration, configuration and product families
"""
