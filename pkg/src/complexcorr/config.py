"""Flat INI-style scenario configs for the command line.

Sections: ``[scenario]`` for the experiment, ``[mccc]`` / ``[rls]`` for
algorithm hyperparameters, ``[noise]`` for mixture components written as
``componentK = probability mean std``. Every key is optional (defaults come
from ``ScenarioConfig``); unknown sections or keys are errors.
"""

from __future__ import annotations

import configparser
import os

from .exceptions import ConfigError
from .noise import GaussianMixtureNoise, MixtureComponent
from .simulation import ScenarioConfig

__all__ = ["load_scenario_config"]


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


_SCENARIO_KEYS = {
    "true_weight": _parse_complex,
    "iterations": int,
    "trials": int,
    "input_std": float,
    "seed": int,
    "wsnr_cap_db": float,
    "steady_window": int,
}
_MCCC_KEYS = {"sigma": float, "epsilon": float}
_RLS_KEYS = {"forgetting": float, "p0": float}
_FIELD_NAMES = {
    ("mccc", "sigma"): "kernel_sigma",
    ("mccc", "epsilon"): "mccc_epsilon",
    ("rls", "forgetting"): "rls_forgetting",
    ("rls", "p0"): "rls_p0",
}


def _read_section(parser, section, keys, out):
    if section not in parser:
        return
    for key, raw in parser[section].items():
        if key not in keys:
            raise ConfigError(f"unknown key '{key}' in section [{section}]")
        try:
            value = keys[key](raw)
        except ValueError:
            raise ConfigError(
                f"[{section}] {key}: cannot parse {raw!r} as {keys[key].__name__}"
            ) from None
        out[_FIELD_NAMES.get((section, key), key)] = value


def _read_noise(parser):
    if "noise" not in parser:
        return None
    components = []
    for key, raw in parser["noise"].items():
        if not (key.startswith("component") and key[len("component"):].isdigit()):
            raise ConfigError(f"unknown key '{key}' in section [noise]")
        parts = raw.split()
        if len(parts) != 3:
            raise ConfigError(
                f"[noise] {key}: expected 'probability mean std', got {raw!r}"
            )
        try:
            prob, mean, std = (float(p) for p in parts)
            components.append((int(key[len("component"):]), MixtureComponent(prob, mean, std)))
        except ValueError as exc:
            raise ConfigError(f"[noise] {key}: {exc}") from None
    components.sort(key=lambda item: item[0])
    try:
        return GaussianMixtureNoise(tuple(c for _, c in components))
    except ValueError as exc:
        raise ConfigError(f"[noise]: {exc}") from None


def load_scenario_config(path: str | os.PathLike) -> ScenarioConfig:
    """Parse a config file into a ``ScenarioConfig``, failing fast on bad entries."""
    if not os.path.isfile(path):
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as handle:
            parser.read_file(handle)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config file {path}: {exc}") from None

    known = {"scenario", "mccc", "rls", "noise"}
    unknown = set(parser.sections()) - known
    if unknown:
        raise ConfigError(f"unknown config section(s): {', '.join(sorted(unknown))}")

    fields: dict = {}
    _read_section(parser, "scenario", _SCENARIO_KEYS, fields)
    _read_section(parser, "mccc", _MCCC_KEYS, fields)
    _read_section(parser, "rls", _RLS_KEYS, fields)
    noise = _read_noise(parser)
    if noise is not None:
        fields["noise"] = noise
    try:
        return ScenarioConfig(**fields)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
