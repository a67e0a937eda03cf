"""
Test package for the crookedlab project.
"""
