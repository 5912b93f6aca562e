"""Result models and console rendering."""
