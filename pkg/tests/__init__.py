"""
Test package for zbasis.
"""
