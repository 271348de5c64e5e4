"""Shared utilities: logging, solver budgets and bound provenance."""
