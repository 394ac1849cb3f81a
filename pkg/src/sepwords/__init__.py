"""Separating binary strings with small DFAs."""
