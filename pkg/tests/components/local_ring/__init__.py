"""Tests for local_ring component."""
