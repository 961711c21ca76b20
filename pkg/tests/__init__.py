"""Tests for symdecomp."""
