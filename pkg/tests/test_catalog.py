import json

import numpy as np
import pytest

from sensorrank.catalog import (
    CRITERION_DIRECTIONS,
    DEFAULT_RANGES,
    RANKING_FIELDS,
    CatalogSpec,
    SensorDescription,
    catalog_to_matrix,
    generate_catalog,
    load_catalog,
    save_catalog,
)
from sensorrank.core import CriterionSpec, Direction


def sensor(**overrides):
    base = dict(
        id="s1",
        battery=50.0,
        price=100.0,
        drift=1.0,
        frequency=2.0,
        energy_consumption=0.5,
        response_time=20.0,
        latitude=10.0,
        longitude=20.0,
    )
    base.update(overrides)
    return SensorDescription(**base)


class TestSensorDescription:
    def test_valid(self):
        s = sensor()
        assert s.battery == 50.0

    @pytest.mark.parametrize(
        "field,value",
        [
            ("battery", -1), ("battery", 101),
            ("price", 0), ("price", -5),
            ("drift", -0.1),
            ("frequency", 0),
            ("energy_consumption", 0),
            ("response_time", 0),
            ("latitude", 91), ("latitude", -91),
            ("longitude", 181),
            ("battery", float("nan")),
        ],
    )
    def test_out_of_range_rejected(self, field, value):
        with pytest.raises(ValueError, match=field):
            sensor(**{field: value})

    def test_zero_drift_allowed(self):
        assert sensor(drift=0.0).drift == 0.0

    def test_empty_id_rejected(self):
        with pytest.raises(ValueError):
            sensor(id="")


class TestCatalogSpec:
    def test_defaults_merged(self):
        spec = CatalogSpec(count=5, seed=1)
        assert spec.ranges["battery"] == (0.0, 100.0)
        assert set(spec.ranges) == set(DEFAULT_RANGES)

    def test_override_one_field(self):
        spec = CatalogSpec(count=5, seed=1, ranges={"price": (50.0, 60.0)})
        assert spec.ranges["price"] == (50.0, 60.0)
        assert spec.ranges["drift"] == DEFAULT_RANGES["drift"]

    def test_count_positive(self):
        with pytest.raises(ValueError):
            CatalogSpec(count=0, seed=1)

    def test_seed_bounds(self):
        with pytest.raises(ValueError):
            CatalogSpec(count=1, seed=-1)
        with pytest.raises(ValueError):
            CatalogSpec(count=1, seed=2**64)

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError, match="colour"):
            CatalogSpec(count=1, seed=1, ranges={"colour": (0.0, 1.0)})

    def test_inverted_range_rejected(self):
        with pytest.raises(ValueError):
            CatalogSpec(count=1, seed=1, ranges={"price": (60.0, 50.0)})

    def test_range_outside_legal_bounds(self):
        with pytest.raises(ValueError):
            CatalogSpec(count=1, seed=1, ranges={"battery": (0.0, 150.0)})
        with pytest.raises(ValueError):
            CatalogSpec(count=1, seed=1, ranges={"price": (0.0, 10.0)})


class TestGenerateCatalog:
    def test_single_sensor_inside_bounds(self):
        (s,) = generate_catalog(CatalogSpec(count=1, seed=99))
        for field, (low, high) in DEFAULT_RANGES.items():
            assert low <= getattr(s, field) <= high
        assert s.id == "s000000"

    def test_deterministic(self):
        spec = CatalogSpec(count=50, seed=7)
        assert generate_catalog(spec) == generate_catalog(spec)

    def test_different_seeds_differ(self):
        a = generate_catalog(CatalogSpec(count=10, seed=1))
        b = generate_catalog(CatalogSpec(count=10, seed=2))
        assert a != b

    def test_uniform_statistics_at_scale(self):
        # Uniform on [0,100]: se of the mean at n=10,000 is ~0.29, so a
        # +/-3 band is a comfortable 3-sigma-plus check.
        sensors = generate_catalog(CatalogSpec(count=10_000, seed=5))
        assert len(sensors) == 10_000
        battery = np.array([s.battery for s in sensors])
        assert abs(battery.mean() - 50.0) < 3.0
        for field, (low, high) in DEFAULT_RANGES.items():
            col = np.array([getattr(s, field) for s in sensors])
            assert col.min() >= low and col.max() <= high

    def test_custom_range_respected(self):
        sensors = generate_catalog(
            CatalogSpec(count=200, seed=3, ranges={"price": (100.0, 101.0)})
        )
        prices = [s.price for s in sensors]
        assert min(prices) >= 100.0 and max(prices) <= 101.0

    def test_ids_sequential(self):
        sensors = generate_catalog(CatalogSpec(count=3, seed=1))
        assert [s.id for s in sensors] == ["s000000", "s000001", "s000002"]


class TestCatalogToMatrix:
    sensors = generate_catalog(CatalogSpec(count=3, seed=11))

    def test_two_criteria_by_name(self):
        m = catalog_to_matrix(self.sensors, ["battery", "price"])
        assert m.values.shape == (3, 2)
        assert [c.direction for c in m.criteria] == [Direction.MAXIMIZE, Direction.MINIMIZE]
        assert m.values[0, 0] == self.sensors[0].battery
        assert m.alternatives == tuple(s.id for s in self.sensors)

    def test_all_six_in_order(self):
        m = catalog_to_matrix(self.sensors, RANKING_FIELDS)
        assert [c.name for c in m.criteria] == list(RANKING_FIELDS)
        assert [c.direction for c in m.criteria] == [
            CRITERION_DIRECTIONS[f] for f in RANKING_FIELDS
        ]

    def test_unknown_criterion(self):
        with pytest.raises(ValueError, match="colour"):
            catalog_to_matrix(self.sensors, ["battery", "colour"])

    def test_duplicate_criterion(self):
        with pytest.raises(ValueError):
            catalog_to_matrix(self.sensors, ["battery", "battery"])

    def test_criteria_count_bounds(self):
        with pytest.raises(ValueError):
            catalog_to_matrix(self.sensors, ["battery"])
        with pytest.raises(ValueError):
            catalog_to_matrix(self.sensors, list(RANKING_FIELDS) + ["battery"])

    def test_explicit_spec_must_match_canonical_direction(self):
        good = CriterionSpec("price", Direction.MINIMIZE, weight=0.5)
        m = catalog_to_matrix(self.sensors, [good, "battery"])
        assert m.criteria[0].weight == 0.5
        bad = CriterionSpec("price", Direction.MAXIMIZE)
        with pytest.raises(ValueError, match="price"):
            catalog_to_matrix(self.sensors, [bad, "battery"])


class TestPersistence:
    def test_round_trip(self, tmp_path):
        sensors = generate_catalog(CatalogSpec(count=100, seed=13))
        path = str(tmp_path / "catalog.jsonl")
        save_catalog(sensors, path)
        assert load_catalog(path) == sensors

    def test_header_line_first(self, tmp_path):
        path = str(tmp_path / "catalog.jsonl")
        save_catalog([sensor()], path)
        with open(path) as fh:
            header = json.loads(fh.readline())
        assert header == {"format": "sensor-catalog", "version": 1}

    def _write(self, tmp_path, lines):
        path = str(tmp_path / "broken.jsonl")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        return path

    def test_negative_price_names_line(self, tmp_path):
        good = json.dumps(
            dict(id="a", battery=1.0, price=5.0, drift=0.0, frequency=1.0,
                 energy_consumption=1.0, response_time=1.0, latitude=0.0, longitude=0.0)
        )
        bad = good.replace('"price": 5.0', '"price": -5.0')
        path = self._write(
            tmp_path, ['{"format": "sensor-catalog", "version": 1}', good, bad]
        )
        with pytest.raises(ValueError, match="line 3"):
            load_catalog(path)

    def test_malformed_json_names_line(self, tmp_path):
        path = self._write(
            tmp_path, ['{"format": "sensor-catalog", "version": 1}', "{not json"]
        )
        with pytest.raises(ValueError, match="line 2"):
            load_catalog(path)

    def test_wrong_keys_names_line(self, tmp_path):
        path = self._write(
            tmp_path, ['{"format": "sensor-catalog", "version": 1}', '{"id": "a"}']
        )
        with pytest.raises(ValueError, match="line 2"):
            load_catalog(path)

    def test_missing_header_rejected(self, tmp_path):
        good = json.dumps(
            dict(id="a", battery=1.0, price=5.0, drift=0.0, frequency=1.0,
                 energy_consumption=1.0, response_time=1.0, latitude=0.0, longitude=0.0)
        )
        path = self._write(tmp_path, [good])
        with pytest.raises(ValueError, match="line 1"):
            load_catalog(path)

    def test_empty_file_rejected(self, tmp_path):
        path = str(tmp_path / "empty.jsonl")
        open(path, "w").close()
        with pytest.raises(ValueError, match="no sensors"):
            load_catalog(path)

    def test_header_only_rejected(self, tmp_path):
        path = self._write(tmp_path, ['{"format": "sensor-catalog", "version": 1}'])
        with pytest.raises(ValueError, match="no sensors"):
            load_catalog(path)
