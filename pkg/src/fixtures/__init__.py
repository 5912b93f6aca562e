"""Reference data shipped with the repository."""
