"""Tests for numerical_semigroups."""
