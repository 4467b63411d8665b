"""The named claim checks all pass at small sizes and fail loudly."""

import pytest

from modqueens.claims import CLAIMS, run_claims


def test_every_claim_passes_at_small_sizes():
    results = run_claims(max_n=4)
    assert [r.name for r in results] == list(CLAIMS)
    failing = [(r.name, r.detail) for r in results if not r.passed]
    assert failing == []


def test_details_are_deterministic():
    first = run_claims(("tree-bounds", "solved-values"), max_n=3)
    second = run_claims(("tree-bounds", "solved-values"), max_n=3)
    assert [(r.name, r.detail) for r in first] == \
           [(r.name, r.detail) for r in second]


def test_selection_keeps_registry_order():
    results = run_claims(("solved-values", "odd-complete"), max_n=3)
    assert [r.name for r in results] == ["odd-complete", "solved-values"]


def test_unknown_claim_name_raises():
    with pytest.raises(ValueError, match="unknown claims: no-such-claim"):
        run_claims(("no-such-claim",))


def test_claim_exception_becomes_failure(monkeypatch):
    def boom(max_n):
        raise RuntimeError("witness burned")
    monkeypatch.setitem(CLAIMS, "odd-complete", boom)
    result = run_claims(("odd-complete",), max_n=3)[0]
    assert not result.passed
    assert "witness burned" in result.detail
