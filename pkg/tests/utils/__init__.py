"""
Tests for utility functions.
""" 