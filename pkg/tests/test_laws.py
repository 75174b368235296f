from convlab.laws import LawResult, emit_tables, run_laws


class TestRunner:
    def test_small_run_is_green_with_many_suites(self):
        report = run_laws(max_size=2)
        assert report.ok
        assert len(report.results) >= 12
        assert sum(r.instances for r in report.results) > 1000

    def test_report_accessors(self):
        report = run_laws(max_size=2)
        r = report.result("Sierpinski fixture")
        assert r.ok and r.instances == 3
        doc = report.as_dict()
        assert doc["ok"] is True
        assert {"name", "instances", "ok", "failures"} <= set(doc["suites"][0])

    def test_failure_capping(self):
        r = LawResult("x")
        for i in range(20):
            r.fail(f"boom {i}")
        assert len(r.failures) <= 6
        assert not r.ok


class TestTables:
    def test_emitted_tables_are_complete(self):
        doc = emit_tables(max_size=2)
        assert doc["all_sweep_suites_ok"]
        lefts = [r["perfect_like"] for r in doc["implication_table"]]
        assert lefts == [None, None, "perfect", "countably_perfect",
                         "adherent", "closed"]
        for row in doc["implication_table"]:
            if row["perfect_like"] is not None:
                assert row["violations"] == 0
                if "non_reversal_witness" in row:
                    assert row["non_reversal_witness"] is not None
        assert len(doc["preservation_table"]) == 5
        refl = [r["reflector"] for r in doc["preservation_table"]]
        assert refl == ["I", "S", "S1", "S0", "T"]
        ladder = doc["quotient_ladder_strictness"]
        assert ladder["open vs almost open"] is not None
        assert ladder["biquotient vs countably biquotient"] == \
            "collapses at finite scale"
