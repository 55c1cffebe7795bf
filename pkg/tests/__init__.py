"""Tests for the syzygy engine."""
