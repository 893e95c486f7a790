"""Tests for logger component."""
