"""Database operations and session management."""

import json
from pathlib import Path
from contextlib import contextmanager
from typing import List, Optional
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.exc import SQLAlchemyError

from src.storage.models import Base, SearchRun, VerificationRun
from src.reports.models import RunRecord, SearchReport, VerificationReport
from src.config import config
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Database:
    """Run history stored in SQLite."""
    
    def __init__(self, db_path: str = None):
        """Initialize database connection."""
        self.db_path = db_path or config.db_path
        self._ensure_db_directory()
        self.engine = create_engine(
            f'sqlite:///{self.db_path}',
            echo=False,
            connect_args={'check_same_thread': False}
        )
        self.SessionLocal = sessionmaker(bind=self.engine, expire_on_commit=False)
        self._create_tables()
        self.logger = logger
    
    def _ensure_db_directory(self) -> None:
        """Ensure the database directory exists."""
        db_dir = Path(self.db_path).parent
        db_dir.mkdir(parents=True, exist_ok=True)
    
    def _create_tables(self) -> None:
        """Create all database tables."""
        Base.metadata.create_all(self.engine)
    
    @contextmanager
    def get_session(self):
        """Get a database session with automatic cleanup."""
        session = self.SessionLocal()
        try:
            yield session
            session.commit()
        except SQLAlchemyError as e:
            session.rollback()
            raise e
        finally:
            session.close()
    
    # Search runs
    def save_search_report(self, report: SearchReport) -> SearchRun:
        """Store a search report."""
        with self.get_session() as session:
            run = SearchRun(
                n=report.n,
                max_value=str(report.max_value),
                argmax=json.dumps(report.argmax),
                all_argmax_richardson=report.all_argmax_richardson,
                threads=report.threads,
                runtime_ms=report.runtime_ms,
                discrepancies=json.dumps(report.discrepancies)
            )
            session.add(run)
            session.flush()
            self.logger.info(f"Stored search run {run.id} for S_{report.n}")
            return run
    
    def list_search_runs(self, limit: int = 20) -> List[SearchRun]:
        """Most recent search runs first."""
        with self.get_session() as session:
            return session.query(SearchRun).order_by(
                SearchRun.created_at.desc(), SearchRun.id.desc()
            ).limit(limit).all()
    
    # Verification runs
    def save_verification_report(self, report: VerificationReport) -> VerificationRun:
        """Store a verification report."""
        with self.get_session() as session:
            run = VerificationRun(
                identity=report.identity,
                params=json.dumps(report.params, sort_keys=True, default=str),
                cases=report.cases,
                skipped=report.skipped,
                passed=report.passed,
                elapsed_ms=report.elapsed_ms,
                counterexample=report.counterexample.model_dump_json()
                if report.counterexample else None
            )
            session.add(run)
            session.flush()
            self.logger.info(f"Stored verification run {run.id} for {report.identity}")
            return run
    
    def list_verification_runs(self, identity: Optional[str] = None,
                               limit: int = 20) -> List[VerificationRun]:
        """Most recent verification runs first, optionally for one identity."""
        with self.get_session() as session:
            query = session.query(VerificationRun)
            if identity:
                query = query.filter(VerificationRun.identity == identity)
            return query.order_by(
                VerificationRun.created_at.desc(), VerificationRun.id.desc()
            ).limit(limit).all()
    
    def history(self, kind: Optional[str] = None, limit: int = 20) -> List[RunRecord]:
        """Stored runs of both kinds as uniform records, newest first."""
        records = []
        if kind in (None, 'search'):
            for run in self.list_search_runs(limit):
                records.append(RunRecord(
                    id=run.id, kind='search', label=f"S_{run.n}",
                    passed=not json.loads(run.discrepancies or '[]'),
                    summary=f"max {run.max_value} at {', '.join(json.loads(run.argmax))}",
                    runtime_ms=run.runtime_ms, created_at=run.created_at
                ))
        if kind in (None, 'verify'):
            for run in self.list_verification_runs(limit=limit):
                records.append(RunRecord(
                    id=run.id, kind='verify', label=run.identity, passed=run.passed,
                    summary=f"{run.cases} cases, {run.skipped} skipped",
                    runtime_ms=run.elapsed_ms, created_at=run.created_at
                ))
        records.sort(key=lambda r: (r.created_at is not None, r.created_at, r.id), reverse=True)
        return records[:limit]


_db: Optional[Database] = None


def get_database(db_path: Optional[str] = None) -> Database:
    """Shared Database instance, created on first use."""
    global _db
    if db_path is not None:
        return Database(db_path)
    if _db is None:
        _db = Database()
    return _db
