"""Utility helpers for rhombil."""
