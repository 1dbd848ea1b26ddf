"""Fuzz harnesses: inequality checks, distance axioms, and their reports.

These drive both the CLI and the acceptance suite. Every record carries the
two compared values and a signed gap (positive = violation), so a report is
auditable without rerunning. Reports serialize deterministically: equal
seeds give byte-identical JSON (wall time is kept out of the document and
only logged separately).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

from . import qdistance
from .cdivergence import d_of_joint
from .ensemble import Ensemble, dbhq, purity, verify_property_f
from .measurements import check_theorem1, effects_from_axis, joint_distribution
from .notions import ALL_NOTIONS, DistanceNotion, violation_gap
from .sampling import (
    random_axis,
    random_density,
    random_kraus_channel,
    random_qubit_ensemble,
    rng_from_seed,
)

INEQUALITY_TOL = 1e-9
PROPERTY_F_TOL = 1e-8
ADDITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class TrialRecord:
    """One verified comparison: lhs vs rhs under a named check."""

    trial: int
    check: str
    subject: str
    lhs: float
    rhs: float
    gap: float
    ok: bool
    iterations: int = 0


@dataclass(frozen=True)
class RunReport:
    """A command echo, its trial records, and summary counters.

    wall_time_s is measured but excluded from the serialized document so
    that reports from equal seeds compare byte-identical.
    """

    command: str
    records: tuple
    violations: int
    max_gap: float
    wall_time_s: float


def ensemble_digest(e: Ensemble) -> str:
    """Short stable content hash of an ensemble."""
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(e.weights).tobytes())
    h.update(np.ascontiguousarray(e.states).tobytes())
    return h.hexdigest()[:12]


def build_report(command: str, records, wall_time_s: float) -> RunReport:
    records = tuple(records)
    violations = sum(1 for r in records if not r.ok)
    max_gap = max((r.gap for r in records), default=0.0)
    return RunReport(
        command=command,
        records=records,
        violations=violations,
        max_gap=float(max_gap),
        wall_time_s=float(wall_time_s),
    )


def _json_float(x: float):
    # JSON has no inf; encode the sentinel explicitly
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(x)


def report_to_json(report: RunReport) -> str:
    doc = {
        "command": report.command,
        "records": [
            {
                "trial": r.trial,
                "check": r.check,
                "subject": r.subject,
                "lhs": _json_float(r.lhs),
                "rhs": _json_float(r.rhs),
                "gap": _json_float(r.gap),
                "ok": r.ok,
                "iterations": r.iterations,
            }
            for r in report.records
        ],
        "summary": {
            "records": len(report.records),
            "violations": report.violations,
            "max_gap": _json_float(report.max_gap),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run_inequality_fuzz(trials: int, seed: int,
                        notions=ALL_NOTIONS, axes_per_trial: int = 5,
                        tol: float = INEQUALITY_TOL) -> list[TrialRecord]:
    """Random qubit ensembles against random measurement axes.

    For every axis: each notion's measured divergence against its ensemble
    bound, plus the purity lower bound on the Bhattacharyya coefficient of
    the outcome table.
    """
    rng = rng_from_seed(seed)
    records: list[TrialRecord] = []
    for t in range(trials):
        e = random_qubit_ensemble(rng)
        digest = ensemble_digest(e)
        for _ in range(axes_per_trial):
            axis = random_axis(rng)
            povm = effects_from_axis(axis)
            joint = joint_distribution(e, povm)
            for notion in notions:
                lhs, rhs, ok = check_theorem1(e, povm, notion, tol)
                records.append(
                    TrialRecord(
                        trial=t,
                        check=notion.value,
                        subject=digest,
                        lhs=float(lhs),
                        rhs=float(rhs),
                        gap=float(violation_gap(notion, lhs, rhs)),
                        ok=ok,
                    )
                )
            b_joint = d_of_joint(DistanceNotion.BHATTACHARYYA, joint)
            gamma = purity(e.average)
            records.append(
                TrialRecord(
                    trial=t,
                    check="purity-bound",
                    subject=digest,
                    lhs=float(b_joint),
                    rhs=float(gamma),
                    gap=float(gamma - b_joint),
                    ok=b_joint >= gamma - tol,
                )
            )
    return records


def run_dpi_fuzz(trials: int, seed: int, tol: float = INEQUALITY_TOL) -> list[TrialRecord]:
    """Data-processing checks for the four distance-type measures over
    random state pairs (dims 2 to 4) and random channels."""
    rng = rng_from_seed(seed)
    records: list[TrialRecord] = []
    for t in range(trials):
        dim = int(rng.integers(2, 5))
        rho = random_density(rng, dim)
        sigma = random_density(rng, dim)
        ch = random_kraus_channel(rng, dim)
        out_rho = qdistance.apply_channel(ch, rho)
        out_sigma = qdistance.apply_channel(ch, sigma)
        for d in qdistance.DPI_DISTANCES:
            before = d.evaluate(rho, sigma)
            after = d.evaluate(out_rho, out_sigma)
            if math.isinf(before):
                # an infinite bound can only be respected
                gap = 0.0 if math.isinf(after) else -math.inf
            else:
                gap = after - before
            records.append(
                TrialRecord(
                    trial=t,
                    check=f"dpi-{d.name}",
                    subject=f"dim{dim}",
                    lhs=float(after),
                    rhs=float(before),
                    gap=float(gap),
                    ok=after <= before + tol,
                )
            )
    return records


def run_additivity_fuzz(trials: int, seed: int,
                        tol: float = ADDITIVITY_TOL) -> list[TrialRecord]:
    """Tensoring a common uncorrelated factor must not move any measure."""
    rng = rng_from_seed(seed)
    records: list[TrialRecord] = []
    for t in range(trials):
        rho1 = random_density(rng, 2)
        rho2 = random_density(rng, 2)
        sigma = random_density(rng, 2)
        for d in qdistance.ADDITIVITY_DISTANCES:
            plain = d.evaluate(rho1, rho2)
            tensored = d.evaluate(np.kron(rho1, sigma), np.kron(rho2, sigma))
            gap = abs(tensored - plain)
            records.append(
                TrialRecord(
                    trial=t,
                    check=f"additivity-{d.name}",
                    subject="dim2x2",
                    lhs=float(tensored),
                    rhs=float(plain),
                    gap=float(gap),
                    ok=gap <= tol,
                )
            )
    return records


def run_property_f_fuzz(trials: int, seed: int,
                        tol: float = PROPERTY_F_TOL) -> list[TrialRecord]:
    """Block-diagonal identity: embedding the ensemble as a classical-
    quantum state reproduces the ensemble bound exactly, every notion."""
    rng = rng_from_seed(seed)
    records: list[TrialRecord] = []
    for t in range(trials):
        e = random_qubit_ensemble(rng)
        digest = ensemble_digest(e)
        for notion in ALL_NOTIONS:
            lhs, rhs = verify_property_f(e, notion)
            gap = abs(lhs - rhs)
            records.append(
                TrialRecord(
                    trial=t,
                    check=f"block-identity-{notion.value}",
                    subject=digest,
                    lhs=float(lhs),
                    rhs=float(rhs),
                    gap=float(gap),
                    ok=gap <= tol,
                )
            )
    return records


def run_axiom_suite(dpi_trials: int, additivity_trials: int,
                    property_f_trials: int, seed: int) -> list[TrialRecord]:
    """The full axiom battery used by the CLI and the acceptance gate."""
    records = run_dpi_fuzz(dpi_trials, seed)
    records += run_additivity_fuzz(additivity_trials, seed + 1)
    records += run_property_f_fuzz(property_f_trials, seed + 2)
    return records
