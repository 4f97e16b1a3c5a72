"""Acceptance gate: every criterion runs through its named suite at full
sample counts with exact (zero-tolerance) equality, printing one line per
criterion.  Run with `pytest tests/test_acceptance.py -v -s` to see the
lines, or `formk1 verify-paper` for the same content as JSON."""

import pytest

from formk1.suites import DEFAULT_SEED, run_suite

CRITERIA = [
    ("01 generator soundness", "generator-soundness", 12000),
    ("02 four-condition equivalence", "quadratic-conditions", 600),
    ("03 polynomial parameter closure", "polynomial-closure", 4000),
    ("04 isotropic update membership", "isotropic-updates", 625),
    ("05 excision fold/lift and double roundtrip", "excision", 400),
    ("06 reduction certificates", "reduction-certificates", 200),
    ("07 polynomial normal forms", "kopeiko", 100),
    ("08 truncated unit factorization", "truncated-units", 1000),
    ("09 torsion descent", "torsion-descent", 4),
    ("10 graded dilation laws", "graded-dilation", 1200),
    ("11 transvection/generator cross-check", "transvection-generators", 300),
]


@pytest.mark.parametrize("label,suite,min_cases", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, suite, min_cases):
    result = run_suite(suite, DEFAULT_SEED)
    status = "PASS" if result.ok else "FAIL"
    print(f"[{status}] {label}: {result.cases} cases")
    assert result.cases >= min_cases, (
        f"{label}: only {result.cases} cases, expected at least {min_cases}"
    )
    assert result.ok, f"{label}: {result.failures[:5]}"
