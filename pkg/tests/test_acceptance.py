"""Acceptance gate: one named check per criterion, exact arithmetic only.

Each test runs a registry check at the default seed and prints a single
ACCEPT line so the full run shows one verdict per criterion.
"""

import pytest

CRITERIA = [
    pytest.param("deg-FB-24", id="01-deg-FB-24"),
    pytest.param("alphai-deg-6", id="02-alphai-deg-6"),
    pytest.param("chow-B-presentation", id="03-chow-B-presentation"),
    pytest.param("gensA2B-relation", id="04-gensA2B-relation"),
    pytest.param("EiZi-vanishing", id="05-EiZi-vanishing"),
    pytest.param("blowup-consistency", id="06-blowup-consistency"),
    pytest.param("AI-coefficient", id="07-AI-coefficient"),
    pytest.param("segre-birational", id="08-segre-birational"),
    pytest.param("relative-canonical-I", id="09-relative-canonical-I"),
    pytest.param("bott-six-weights", id="10-bott-six-weights"),
    pytest.param("dimension-ledger", id="11-dimension-ledger"),
    pytest.param("pencil-beta", id="12-pencil-beta"),
    pytest.param("K-invariants", id="13-K-invariants"),
    pytest.param("congruence-model", id="14-congruence-model",
                 marks=pytest.mark.slow),
    pytest.param("cubic-locus", id="15-cubic-locus",
                 marks=pytest.mark.slow),
    pytest.param("property-suites", id="16-property-suites"),
]


@pytest.mark.parametrize("name", CRITERIA)
def test_acceptance(name, run_named_check, capsys):
    result = run_named_check(name)
    with capsys.disabled():
        print("\nACCEPT %s: %s" % (name, "PASS" if result.passed else "FAIL"))
    assert result.passed, "\n".join(result.transcript)
