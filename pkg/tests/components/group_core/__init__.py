"""Tests for group_core component."""
