"""Tests for chartab component."""
