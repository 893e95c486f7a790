"""Whittaker tests."""
