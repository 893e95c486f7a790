"""Tests for constructions component."""
