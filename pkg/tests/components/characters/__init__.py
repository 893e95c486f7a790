"""Tests for characters component."""
