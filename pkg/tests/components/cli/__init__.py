"""Tests for cli component."""
