import pytest

from recbench.config import (
    ConfigError,
    DEFAULTS,
    as_bool,
    as_int,
    load_config,
    parse_config,
)


def test_parse_basic():
    cfg = parse_config("# comment\ncache_dir = /tmp/c\nnetwork=on\n")
    assert cfg == {"cache_dir": "/tmp/c", "network": "on"}


def test_parse_rejects_unknown_key():
    with pytest.raises(ConfigError):
        parse_config("no_such_key=1")


def test_parse_rejects_bad_line():
    with pytest.raises(ConfigError):
        parse_config("just some words")


def test_precedence(tmp_path):
    path = tmp_path / "conf"
    path.write_text("max_terms=33\nnetwork=on\n")
    # file overrides defaults
    cfg = load_config(str(path), env={})
    assert cfg["max_terms"] == "33"
    assert cfg["network"] == "on"
    assert cfg["max_order"] == DEFAULTS["max_order"]
    # environment overrides file
    cfg = load_config(str(path), env={"RECBENCH_MAX_TERMS": "44"})
    assert cfg["max_terms"] == "44"
    assert cfg["network"] == "on"


def test_missing_file_uses_defaults(tmp_path):
    cfg = load_config(str(tmp_path / "nope"), env={})
    assert cfg == DEFAULTS


def test_coercions():
    assert as_bool("on") and as_bool("TRUE") and as_bool("1")
    assert not as_bool("off") and not as_bool("no")
    with pytest.raises(ConfigError):
        as_bool("maybe")
    assert as_int("12") == 12
    with pytest.raises(ConfigError):
        as_int("x")
