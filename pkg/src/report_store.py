"""
report_store.py - SQLite store for filtration reports and batch runs
"""

import json
from datetime import datetime
from typing import Dict, List, Optional

from sqlalchemy import Boolean, Column, DateTime, Integer, String, Text, UniqueConstraint, create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from pfilt import BatchSummary, FiltrationReport
from rootdata import weight_text

Base = declarative_base()


class ReportRecord(Base):
    """One filtration report per (type, p, lambda)"""
    __tablename__ = 'filtration_reports'
    __table_args__ = (UniqueConstraint('cartan_type', 'p', 'lam', name='uq_report_key'),)

    id = Column(Integer, primary_key=True, autoincrement=True)
    cartan_type = Column(String(8), nullable=False, index=True)
    p = Column(Integer, nullable=False, index=True)
    lam = Column(String(100), nullable=False)
    basis = Column(String(20), default='Delta^red')
    sections = Column(Text, default='[]')
    nonnegative = Column(Boolean, index=True)
    residual_zero = Column(Boolean)
    dimension_identity = Column(Boolean)
    regular = Column(Boolean)
    in_jantzen_region = Column(Boolean)
    p_ge_2h_minus_2 = Column(Boolean)
    linked = Column(Boolean)
    singular_lcf = Column(Boolean)
    payload = Column(Text)
    schema_version = Column(Integer)
    stored_at = Column(DateTime, default=datetime.utcnow)

    def to_dict(self):
        return json.loads(self.payload)


class BatchRunRecord(Base):
    """Counts of one batch run"""
    __tablename__ = 'batch_runs'

    id = Column(Integer, primary_key=True)
    cartan_type = Column(String(8), nullable=False)
    p = Column(Integer, nullable=False)
    bound = Column(Integer, nullable=False)
    total = Column(Integer)
    nonnegative = Column(Integer)
    failures = Column(Integer)
    counts = Column(Text)
    run_at = Column(DateTime, default=datetime.utcnow, index=True)

    def get_counts(self) -> Dict[str, int]:
        return json.loads(self.counts or '{}')


class ReportStore:
    def __init__(self, db_path: str):
        self.engine = create_engine(f'sqlite:///{db_path}', echo=False)
        Base.metadata.create_all(self.engine)
        Session = sessionmaker(bind=self.engine)
        self.session = Session()

    # =========================================================================
    # REPORT OPERATIONS
    # =========================================================================

    def save_report(self, report: FiltrationReport) -> ReportRecord:
        """Insert or replace the row for (type, p, lambda)."""
        key = weight_text(report.lam)
        record = self.session.query(ReportRecord).filter_by(
            cartan_type=str(report.cartan_type), p=report.p, lam=key,
        ).first()
        if record is None:
            record = ReportRecord(cartan_type=str(report.cartan_type), p=report.p, lam=key)
            self.session.add(record)
        data = report.to_dict()
        record.basis = report.basis
        record.sections = json.dumps(data['sections'])
        record.nonnegative = report.nonnegative
        record.residual_zero = report.residual_zero
        record.dimension_identity = report.dimension_identity
        record.regular = report.regular
        record.in_jantzen_region = report.in_jantzen_region
        record.p_ge_2h_minus_2 = report.p_ge_2h_minus_2
        record.linked = report.linked
        record.singular_lcf = bool(report.singular_lcf_weights)
        record.payload = json.dumps(data, sort_keys=True)
        record.schema_version = report.schema_version
        record.stored_at = datetime.utcnow()
        self.session.commit()
        return record

    def get_report(self, cartan_type: str, p: int, lam) -> Optional[Dict]:
        record = self.session.query(ReportRecord).filter_by(
            cartan_type=str(cartan_type), p=p, lam=weight_text(lam),
        ).first()
        return record.to_dict() if record else None

    def list_reports(self, cartan_type: Optional[str] = None, p: Optional[int] = None,
                     nonnegative: Optional[bool] = None, limit: int = 1000) -> List[ReportRecord]:
        query = self.session.query(ReportRecord)
        if cartan_type is not None:
            query = query.filter(ReportRecord.cartan_type == str(cartan_type))
        if p is not None:
            query = query.filter(ReportRecord.p == p)
        if nonnegative is not None:
            query = query.filter(ReportRecord.nonnegative == nonnegative)
        return query.order_by(ReportRecord.cartan_type, ReportRecord.p, ReportRecord.id).limit(limit).all()

    # =========================================================================
    # BATCH OPERATIONS
    # =========================================================================

    def save_batch(self, summary: BatchSummary) -> BatchRunRecord:
        for report in summary.reports:
            self.save_report(report)
        counts = summary.counts()
        run = BatchRunRecord(
            cartan_type=str(summary.cartan_type),
            p=summary.p,
            bound=summary.bound,
            total=counts['total'],
            nonnegative=counts['nonnegative'],
            failures=counts['failures'],
            counts=json.dumps(counts, sort_keys=True),
        )
        self.session.add(run)
        self.session.commit()
        return run

    def get_batch_history(self, limit: int = 10) -> List[BatchRunRecord]:
        return self.session.query(BatchRunRecord).order_by(BatchRunRecord.run_at.desc()).limit(limit).all()

    # =========================================================================
    # STATISTICS
    # =========================================================================

    def get_stats(self) -> Dict[str, int]:
        total = self.session.query(ReportRecord).count()
        nonnegative = self.session.query(ReportRecord).filter(ReportRecord.nonnegative == True).count()
        singular = self.session.query(ReportRecord).filter(ReportRecord.singular_lcf == True).count()
        runs = self.session.query(BatchRunRecord).count()
        return {
            'total_reports': total,
            'nonnegative_reports': nonnegative,
            'negative_reports': total - nonnegative,
            'singular_lcf_reports': singular,
            'batch_runs': runs,
        }

    def close(self):
        self.session.close()
        self.engine.dispose()
