"""Logging and wall-clock budgets."""
