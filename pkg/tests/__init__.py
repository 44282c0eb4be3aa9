"""Tests for pathspace."""
