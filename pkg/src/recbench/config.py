"""Workbench configuration.

Plain-text key=value file ('#' comments allowed), with environment
overrides.  Precedence, highest first:

  1. environment variables RECBENCH_<KEY> (key uppercased)
  2. the configuration file (default ~/.recbench.conf, or the path in
     RECBENCH_CONFIG)
  3. built-in defaults

Keys: cache_dir (b-file cache directory), network (on/off), max_terms
(report term budget per sequence), max_order / max_degree (guessing
bounds for the CLI).
"""

import os

DEFAULTS = {
    "cache_dir": os.path.expanduser("~/.cache/recbench"),
    "network": "off",
    "max_terms": "60",
    "max_order": "10",
    "max_degree": "24",
}

_BOOL_TRUE = {"on", "true", "1", "yes"}
_BOOL_FALSE = {"off", "false", "0", "no"}


class ConfigError(Exception):
    pass


def parse_config(text):
    """key=value pairs from config text; unknown keys rejected."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def load_config(path=None, env=None):
    """The effective configuration dict (all values still strings)."""
    env = os.environ if env is None else env
    cfg = dict(DEFAULTS)
    path = path or env.get("RECBENCH_CONFIG") or os.path.expanduser(
        "~/.recbench.conf"
    )
    if os.path.exists(path):
        with open(path) as f:
            cfg.update(parse_config(f.read()))
    for key in DEFAULTS:
        env_key = f"RECBENCH_{key.upper()}"
        if env_key in env:
            cfg[key] = env[env_key]
    return cfg


def as_bool(value):
    v = value.strip().lower()
    if v in _BOOL_TRUE:
        return True
    if v in _BOOL_FALSE:
        return False
    raise ConfigError(f"not a boolean: {value!r}")


def as_int(value):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"not an integer: {value!r}")
