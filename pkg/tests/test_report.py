from fractions import Fraction

import pytest

from revarith import paper_data
from revarith.netlist import Metrics
from revarith.report import (FIELDS, ImprovementRow, MetricRow, improvement,
                             paper_compare)


def oracle_pct(old, new):
    # exact rational, rounded half up to 2 places by hand
    q = Fraction(100 * (old - new), new) * 100
    return float((q + Fraction(1, 2)) // 1) / 100


class TestImprovement:
    @pytest.mark.parametrize("old,new,expected", [
        (60, 31, 93.55), (159, 76, 109.21), (5, 5, 0.0), (8, 4, 100.0),
        (5, 3, 66.67), (38, 23, 65.22), (106, 76, 39.47), (23, 8, 187.5)])
    def test_examples(self, old, new, expected):
        assert improvement(old, new) == expected

    @pytest.mark.parametrize("old,new", [(7, 3), (1, 8), (100, 7), (2, 3)])
    def test_matches_rational_oracle(self, old, new):
        assert improvement(old, new) == oracle_pct(old, new)

    def test_negative_when_worse(self):
        assert improvement(3, 4) == -25.0

    @pytest.mark.parametrize("new", [0, -1])
    def test_rejects_non_positive(self, new):
        with pytest.raises(ValueError):
            improvement(5, new)


class TestRows:
    def test_metric_row_deltas(self):
        r = MetricRow("full", 1, Metrics(8, 3, 5, 21), Metrics(8, 3, 4, 21))
        assert r.deltas == (0, 0, 1, 0)
        assert not r.ok

    def test_improvement_tolerance(self):
        row = ImprovementRow("unit", "garbage_outputs", 1, 3, 5, 3, 66.67, 65)
        assert row.ok and row.gap == 1.67
        far = ImprovementRow("unit", "gate_count", 1, 3, 5, 3, 70.0, 65)
        assert not far.ok


class TestPaperCompare:
    def test_all_rows_reproduce(self):
        rep = paper_compare()
        assert len(rep.metrics) == 9
        assert all(r.ok for r in rep.metrics)
        assert rep.ok

    def test_improvements_within_tolerance(self):
        rep = paper_compare()
        assert len(rep.improvements) == len(paper_data.IMPROVEMENTS)
        for r in rep.improvements:
            assert abs(r.computed - r.stated) <= 2.0, r

    def test_known_rounding_gap(self):
        rep = paper_compare()
        gout = [r for r in rep.improvements
                if r.scope == "unit" and r.metric == "garbage_outputs"][0]
        assert (gout.computed, gout.stated) == (66.67, 65)

    def test_as_built_eight_bit(self):
        rows = {(r.scope, r.design): r for r in paper_compare().metrics}
        assert rows[("8-bit", 1)].as_built.garbage_outputs == 31
        assert rows[("8-bit", 3)].as_built.garbage_outputs == 16
        assert rows[("8-bit", 2)].as_built.quantum_cost == 106

    def test_text_format(self):
        text = paper_compare().format()
        assert text.endswith("result: all values reproduced\n")
        assert "60/23/38/159" in text
        assert "MISMATCH" not in text

    def test_tsv_format(self):
        lines = paper_compare().format(tsv=True).splitlines()
        rows = [ln.split("\t") for ln in lines]
        assert all(len(r) == 9 for r in rows)
        assert sum(r[0] == "metric" for r in rows) == 9 * len(FIELDS)
        assert sum(r[0] == "improvement" for r in rows) == 10

    def test_deterministic(self):
        assert paper_compare().format() == paper_compare().format()
