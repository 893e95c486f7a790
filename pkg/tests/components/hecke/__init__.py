"""Tests for hecke component."""
