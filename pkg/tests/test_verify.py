from patwords.oracle import EnumerationBudget
from patwords.verify import STATUSES, build_report, display_checks, verify_cells


def test_display_checks_expectations():
    checks = display_checks()
    assert all(c["status"] in STATUSES for c in checks)
    for c in checks:
        if c["expect"] == "agree":
            assert c["status"] == "match", c["name"]
        else:
            assert c["status"] == "known-discrepant" and c["first_difference"] is not None, c["name"]
    assert sum(c["status"] == "known-discrepant" for c in checks) == 4


def test_default_report_all_match():
    r = build_report()
    assert r["ok"]
    assert r["summary"]["mismatch"] == 0 and r["summary"]["skipped-budget"] == 0
    assert r["summary"]["match"] == len(r["cells"]) == 21 * 7 * 5
    assert r["bounds"]["n_max"] == 6 and r["bounds"]["k_max"] == 4


def test_cells_record_both_values():
    cells = verify_cells(["122"], 3, 2, EnumerationBudget(max_states=4))
    skipped = [c for c in cells if c["status"] == "skipped-budget"]
    assert skipped and all(c["oracle"] is None for c in skipped)
    assert all(c["formula"] == c["oracle"] for c in cells if c["status"] == "match")


def test_report_deterministic():
    assert build_report(["13-2"], 4, 3) == build_report(["13-2"], 4, 3)
