"""SQLAlchemy database models."""

from datetime import datetime, timezone
from sqlalchemy import (
    Boolean, Column, DateTime, Integer, String, Text
)
from sqlalchemy.orm import declarative_base

Base = declarative_base()


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class SearchRun(Base):
    """One run of the maximizer search over S_n."""
    
    __tablename__ = 'search_runs'
    
    id = Column(Integer, primary_key=True)
    n = Column(Integer, nullable=False, index=True)
    max_value = Column(Text, nullable=False)  # exceeds 64 bits for large n
    argmax = Column(Text, nullable=False)  # JSON list of one-line strings
    all_argmax_richardson = Column(Boolean, nullable=False)
    threads = Column(Integer, default=1)
    runtime_ms = Column(Integer)
    discrepancies = Column(Text)  # JSON list
    created_at = Column(DateTime, default=_utcnow, index=True)
    
    def __repr__(self):
        return f"<SearchRun(n={self.n}, max_value={self.max_value}, argmax={self.argmax})>"


class VerificationRun(Base):
    """One identity sweep."""
    
    __tablename__ = 'verification_runs'
    
    id = Column(Integer, primary_key=True)
    identity = Column(String, nullable=False, index=True)
    params = Column(Text)  # JSON object
    cases = Column(Integer, default=0)
    skipped = Column(Integer, default=0)
    passed = Column(Boolean, nullable=False)
    elapsed_ms = Column(Integer)
    counterexample = Column(Text)  # JSON object or NULL
    created_at = Column(DateTime, default=_utcnow, index=True)
    
    def __repr__(self):
        return f"<VerificationRun(identity='{self.identity}', passed={self.passed}, cases={self.cases})>"
