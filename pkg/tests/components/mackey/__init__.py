"""Tests for mackey component."""
