import pytest

from teqtools.core import full_set, parse, random_tournament, restrict
from teqtools.search import SearchConfig, compose_structured, search_random
from teqtools.teq import minimal_retentive_sets

from conftest import transitive_tournament


class TestComposeStructured:
    def test_embedded_half_recomposes_counterexample(self, big_t, instance):
        half, _ = restrict(big_t, instance.x_set)
        assert compose_structured(half, 6) == big_t

    def test_order_two_half(self):
        t = compose_structured(transitive_tournament(2), 1)
        assert t.order == 4  # constructor validated completeness

    def test_restrict_back_to_first_copy(self):
        half = random_tournament(6, 11)
        composed = compose_structured(half, 3)
        back, _ = restrict(composed, full_set(6))
        assert back == half

    def test_odd_order_rejected(self):
        with pytest.raises(ValueError, match="even"):
            compose_structured(transitive_tournament(3), 1)

    def test_wrong_split_rejected(self):
        with pytest.raises(ValueError, match="split"):
            compose_structured(transitive_tournament(4), 1)

    def test_too_large_rejected(self):
        with pytest.raises(ValueError, match="exceeds"):
            compose_structured(transitive_tournament(34), 17)


class TestSearchConfig:
    def test_valid(self):
        SearchConfig(order=8, trials=10, seed=1).validate()

    @pytest.mark.parametrize("kwargs", [
        dict(order=0, trials=1, seed=0),
        dict(order=8, trials=0, seed=0),
        dict(order=8, trials=1, seed=0, mode="fancy"),
        dict(order=10, trials=1, seed=0, mode="structured"),  # not divisible by 4
        dict(order=8, trials=1, seed=0, time_budget=-1.0),
        dict(order=8, trials=1, seed=0, witness_cap=-1),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SearchConfig(**kwargs).validate()


class TestSearchRandom:
    def test_deterministic(self):
        config = SearchConfig(order=8, trials=50, seed=123)
        a = search_random(config)
        b = search_random(config)
        assert a.to_dict(include_timing=False) == b.to_dict(include_timing=False)

    def test_no_findings_at_small_order(self):
        report = search_random(SearchConfig(order=8, trials=300, seed=7))
        assert report.found == 0
        assert report.witnesses == []
        assert report.timed_out == 0

    def test_structured_mode_runs(self):
        report = search_random(SearchConfig(order=8, trials=30, seed=9, mode="structured"))
        assert report.found == 0

    def test_injected_half_finds_the_instance(self, big_t, instance):
        half, _ = restrict(big_t, instance.x_set)
        config = SearchConfig(order=24, trials=1, seed=0, mode="structured")
        report = search_random(config, half_source=lambda seed: half)
        assert report.found == 1
        assert len(report.witnesses) == 1
        assert parse(report.witnesses[0]) == big_t
        # identical reports, witness bytes included
        again = search_random(config, half_source=lambda seed: half)
        assert again.to_dict(include_timing=False) == report.to_dict(include_timing=False)

    def test_witnesses_reverify_on_reload(self, big_t, instance):
        half, _ = restrict(big_t, instance.x_set)
        config = SearchConfig(order=24, trials=3, seed=0, mode="structured")
        report = search_random(config, half_source=lambda seed: half)
        assert report.found == 3
        for text in report.witnesses:
            assert len(minimal_retentive_sets(parse(text))) >= 2

    def test_witness_cap(self, big_t, instance):
        half, _ = restrict(big_t, instance.x_set)
        config = SearchConfig(order=24, trials=5, seed=0, mode="structured", witness_cap=2)
        report = search_random(config, half_source=lambda seed: half)
        assert report.found == 5
        assert len(report.witnesses) == 2

    def test_zero_time_budget_times_everything_out(self):
        report = search_random(SearchConfig(order=8, trials=10, seed=3, time_budget=0.0))
        assert report.timed_out == 10
        assert report.found == 0

    def test_report_echoes_config(self):
        report = search_random(SearchConfig(order=6, trials=2, seed=42, mode="uniform"))
        assert (report.order, report.trials, report.seed, report.mode) == (6, 2, 42, "uniform")

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError):
            search_random(SearchConfig(order=8, trials=0, seed=1))
