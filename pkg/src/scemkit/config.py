"""Reader for the key-value problem file.

Example::

    # eps y'' + 2 y' + 2 y = 0 on [0, 1]
    epsilon = 0.01
    interval = [0, 1]
    alpha = 0
    beta = 1
    leading = 1          # optional; -1 for a -eps y'' problem

    [p]
    const = 2
    [q]
    const = 2
    [r]
    poly = [0]

Within a coefficient section any of ``const``, ``poly`` and ``exp = {c, k}``
may appear once; several entries are summed.
"""

from __future__ import annotations

import math
import re
from pathlib import Path

from .errors import ConfigError
from .expr import CoefExpr, Constant, ExpLinear, Polynomial, Sum
from .problem import TwoPointBVP

__all__ = ["parse_problem", "load_problem"]

_SECTION = re.compile(r"^\[\s*([A-Za-z_]\w*)\s*\]$")
_COEF_SECTIONS = ("p", "q", "r")
_TOP_KEYS = ("epsilon", "interval", "alpha", "beta", "leading")
_COEF_KEYS = ("const", "poly", "exp")


def _number(text: str, line: int, key: str) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        raise ConfigError(f"expected a number, got {text.strip()!r}", line, key) from None
    if not math.isfinite(value):
        raise ConfigError("value must be finite", line, key)
    return value


def _list(text: str, open_: str, close: str, line: int, key: str) -> list[float]:
    text = text.strip()
    if not (text.startswith(open_) and text.endswith(close)):
        raise ConfigError(f"expected {open_}...{close}, got {text!r}", line, key)
    body = text[1:-1].strip()
    if not body:
        return []
    return [_number(item, line, key) for item in body.split(",")]


def parse_problem(text: str) -> TwoPointBVP:
    top: dict[str, object] = {}
    coefs: dict[str, list[CoefExpr]] = {name: [] for name in _COEF_SECTIONS}
    seen: dict[str, set[str]] = {name: set() for name in _COEF_SECTIONS}
    section = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _SECTION.match(line)
        if header:
            section = header.group(1)
            if section not in _COEF_SECTIONS:
                raise ConfigError(f"unknown section [{section}]; expected [p], [q] or [r]", lineno)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {line!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))

        if section is None:
            if key not in _TOP_KEYS:
                raise ConfigError(f"unknown key; expected one of {', '.join(_TOP_KEYS)}", lineno, key)
            if key in top:
                raise ConfigError("duplicate key", lineno, key)
            if key == "interval":
                bounds = _list(value, "[", "]", lineno, key)
                if len(bounds) != 2:
                    raise ConfigError("interval needs exactly two endpoints", lineno, key)
                if not bounds[0] < bounds[1]:
                    raise ConfigError("interval needs a < b", lineno, key)
                top[key] = bounds
            elif key == "leading":
                sign = _number(value, lineno, key)
                if sign not in (-1.0, 0.0, 1.0):
                    raise ConfigError("leading must be 1 or -1", lineno, key)
                top[key] = int(sign)
            else:
                top[key] = _number(value, lineno, key)
                if key == "epsilon" and top[key] <= 0.0:
                    raise ConfigError("epsilon must be positive", lineno, key)
            continue

        if key not in _COEF_KEYS:
            raise ConfigError(
                f"unknown key in [{section}]; expected const, poly or exp", lineno, key
            )
        if key in seen[section]:
            raise ConfigError(f"duplicate key in [{section}]", lineno, key)
        seen[section].add(key)
        if key == "const":
            coefs[section].append(Constant(_number(value, lineno, key)))
        elif key == "poly":
            values = _list(value, "[", "]", lineno, key)
            if not values:
                raise ConfigError("polynomial needs at least one coefficient", lineno, key)
            coefs[section].append(Polynomial(tuple(values)))
        else:
            values = _list(value, "{", "}", lineno, key)
            if len(values) != 2:
                raise ConfigError("exp needs {c, k}", lineno, key)
            coefs[section].append(ExpLinear(*values))

    for key in ("epsilon", "interval", "alpha", "beta"):
        if key not in top:
            raise ConfigError("missing required key", key=key)
    for name in _COEF_SECTIONS:
        if not coefs[name]:
            raise ConfigError(f"missing section [{name}]", key=name)

    def combine(parts):
        return parts[0] if len(parts) == 1 else Sum(tuple(parts)).simplify()

    a, b = top["interval"]
    return TwoPointBVP(
        epsilon=top["epsilon"],
        p=combine(coefs["p"]),
        q=combine(coefs["q"]),
        r=combine(coefs["r"]),
        a=a,
        b=b,
        alpha=top["alpha"],
        beta=top["beta"],
        leading=top.get("leading", 1),
    )


def load_problem(path) -> TwoPointBVP:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ConfigError(f"{path} is not valid UTF-8") from None
    return parse_problem(text)
