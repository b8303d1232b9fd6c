from __future__ import annotations

from vietacluster.audit import (
    AuditConfig,
    CheckResult,
    a2_equation,
    frozen_reduction,
    render_report,
    run_audit,
    specialization_matches_tree,
)
from vietacluster.registry import get_entry


def test_report_format():
    text = render_report([CheckResult("a", True, "x"), CheckResult("b", False)])
    assert text == "[PASS] a: x\n[FAIL] b\n1 passed, 1 failed\n"


def test_small_audit_passes_and_is_thread_independent():
    config = AuditConfig(depth=3, tree_bound=200, quartic_bound=100)
    serial = render_report(run_audit(config, threads=1))
    parallel = render_report(run_audit(config, threads=4))
    assert serial == parallel
    assert serial.endswith(" 0 failed\n")


def test_specialization_position_correspondence():
    entry = get_entry("cubic_general")
    assert specialization_matches_tree(entry, {"k1": 0, "k2": 1, "k3": 2}, depth=4)


def test_frozen_reductions():
    for name in ("frozen_markov", "frozen_k1", "frozen_k1_k2", "frozen_lampe", "frozen_quartic"):
        assert frozen_reduction(get_entry(name), depth=4).ok


def test_a2_equation_check():
    assert a2_equation(200).ok
