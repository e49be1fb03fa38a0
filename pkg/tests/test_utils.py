import argparse
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from config.config_manager import ConfigError, ConfigManager, set_config
from utils.file_utils import generate_report_path, load_json, save_json
from utils.serialization import (
    SerializationError,
    combination_from_json,
    combination_to_json,
    combination_to_text,
    format_rational,
    matrix_from_json,
    matrix_to_json,
    parse_rational
)


def test_rationals_always_carry_a_denominator():
    assert format_rational(Fraction(-8)) == "-8/1"
    assert format_rational(Fraction(3, 6)) == "1/2"
    assert parse_rational("3") == 3


@given(st.fractions())
def test_rational_strings_parse_back(value):
    assert parse_rational(format_rational(value)) == value


@pytest.mark.parametrize("text", ["x/2", "1/0", "", "1.5"])
def test_bad_rational_literals(text):
    with pytest.raises(SerializationError):
        parse_rational(text)


def test_rational_must_be_a_string():
    with pytest.raises(SerializationError):
        parse_rational(3)


def test_matrix_payloads():
    assert matrix_to_json([[1, Fraction(-1, 2)]]) == [["1/1", "-1/2"]]
    assert matrix_from_json([["0/1", "9/1"], ["-9/1", "0/1"]]) == [[0, 9], [-9, 0]]
    with pytest.raises(SerializationError):
        matrix_from_json([["1/1"], ["1/1", "2/1"]])
    with pytest.raises(SerializationError):
        matrix_from_json("1/1")


def test_combinations():
    combination = {"h1": Fraction(-8), "h2": Fraction(-4)}
    assert combination_to_json(combination) == [{"name": "h1", "coeff": "-8/1"}, {"name": "h2", "coeff": "-4/1"}]
    assert combination_to_text(combination) == "-8*h1 - 4*h2"
    assert combination_to_text({}) == "0"
    merged = combination_from_json([{"name": "a", "coeff": "1/2"}, {"name": "a", "coeff": "-1/2"},
                                    {"name": "b", "coeff": "2"}])
    assert merged == {"b": 2}
    with pytest.raises(SerializationError):
        combination_from_json([{"name": "a"}])


def test_json_files_round_trip(tmp_path):
    path = str(tmp_path / "nested" / "report.json")
    save_json({"passed": True, "coeff": "1/2"}, path)
    assert load_json(path) == {"passed": True, "coeff": "1/2"}


def test_config_defaults_and_overrides(monkeypatch):
    monkeypatch.setenv("PREPROJ_CACHE_DIR", "/tmp/preproj-cache")
    config = ConfigManager()
    assert config.get("cache", "dir") == "/tmp/preproj-cache"
    assert config.get("output", "format") == "text"
    assert config.get("computation", "max_degree") is None
    assert config.get("computation", "missing", default=7) == 7

    config.update_from_args(argparse.Namespace(no_cache=True, format="json", max_degree=6, cache_dir=None))
    assert config.get("cache", "enabled") is False
    assert config.get("output", "format") == "json"
    assert config.get("computation", "max_degree") == 6
    assert config.get("cache", "dir") == "/tmp/preproj-cache"


def test_negative_max_degree_rejected():
    config = ConfigManager()
    with pytest.raises(ConfigError):
        config.update_from_args(argparse.Namespace(max_degree=-1))


def test_custom_config_file(tmp_path):
    path = tmp_path / "custom.yaml"
    path.write_text("output:\n  format: latex\n  reports_dir: %s\n" % (tmp_path / "reports"))
    config = ConfigManager(str(path))
    assert config.output_format == "latex"
    assert config.max_degree is None

    set_config(config)
    report = generate_report_path("verify")
    assert report.startswith(str(tmp_path / "reports"))
    assert report.endswith(".json")


def test_config_file_without_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- just\n- a list\n")
    config = ConfigManager(str(path))
    assert config.get("output", "format", default="text") == "text"
    assert config.output_format == "text"
