"""schurkit - flagged Schur and Schubert polynomial identities, exactly."""

__version__ = "0.1.0"
