"""Cross-route identity verification."""
