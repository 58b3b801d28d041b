"""Reading and writing `.code` files that describe a code.

Format::

    code n=4 k=1 r=1
    [stabilizer]
    XXXX
    ZZZZ
    [gauge_x]
    IXIX
    [gauge_z]
    IIZZ

Optional ``[logical_x]`` / ``[logical_z]`` sections pin the encoded operators.
``#`` starts a comment.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .codes import SubsystemCode
from .pauli import MalformedInputError, parse_pauli

__all__ = ["SpecParseError", "parse_code_spec", "format_code_spec", "load_code_spec", "bundled_spec", "bundled_specs"]

SECTIONS = ("stabilizer", "gauge_x", "gauge_z", "logical_x", "logical_z")
_HEADER = re.compile(r"^code\s+n=(\d+)\s+k=(\d+)\s+r=(\d+)$")


class SpecParseError(MalformedInputError):
    """Syntax error in a `.code` file."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_code_spec(text: str, name: str = "", validate: bool = True) -> SubsystemCode:
    """Parse `.code` text, validating the code unless ``validate`` is False."""
    header = None
    sections: dict[str, list] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            match = _HEADER.match(line)
            if not match:
                raise SpecParseError(lineno, f"expected 'code n=<int> k=<int> r=<int>', got {line!r}")
            header = tuple(int(g) for g in match.groups())
            continue
        if line.startswith("["):
            if not line.endswith("]") or line[1:-1] not in SECTIONS:
                raise SpecParseError(lineno, f"unknown section {line!r}")
            current = line[1:-1]
            if current in sections:
                raise SpecParseError(lineno, f"duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise SpecParseError(lineno, "Pauli row outside any section")
        try:
            word = parse_pauli(line)
        except MalformedInputError as exc:
            raise SpecParseError(lineno, str(exc)) from None
        if word.n != header[0]:
            raise SpecParseError(lineno, f"row {line!r} has length {word.n}, expected {header[0]}")
        sections[current].append(word)
    if header is None:
        raise SpecParseError(0, "missing header line")
    n, k, r = header
    if "stabilizer" not in sections:
        raise SpecParseError(0, "missing [stabilizer] section")
    if r > 0 and ("gauge_x" not in sections or "gauge_z" not in sections):
        raise SpecParseError(0, "r > 0 needs [gauge_x] and [gauge_z]")
    code = SubsystemCode(
        n,
        k,
        r,
        tuple(sections["stabilizer"]),
        tuple(sections.get("gauge_x", ())),
        tuple(sections.get("gauge_z", ())),
        tuple(sections.get("logical_x", ())),
        tuple(sections.get("logical_z", ())),
        name=name,
    )
    return code.validate() if validate else code


def format_code_spec(code: SubsystemCode) -> str:
    lines = [f"code n={code.n} k={code.k} r={code.r}"]
    for section in SECTIONS:
        words = getattr(code, section)
        if not words:
            continue
        lines.append(f"[{section}]")
        lines.extend(str(w) for w in words)
    return "\n".join(lines) + "\n"


def load_code_spec(path, validate: bool = True) -> SubsystemCode:
    path = Path(path)
    return parse_code_spec(path.read_text(), name=path.stem, validate=validate)


def bundled_specs() -> list[str]:
    root = resources.files("subsys_encode") / "specs"
    return sorted(p.name[: -len(".code")] for p in root.iterdir() if p.name.endswith(".code"))


def bundled_spec(name: str) -> SubsystemCode:
    """One of the example codes shipped with the package, e.g. ``"five_qubit"``."""
    resource = resources.files("subsys_encode") / "specs" / f"{name}.code"
    if not resource.is_file():
        raise FileNotFoundError(f"no bundled spec {name!r}; have {', '.join(bundled_specs())}")
    return parse_code_spec(resource.read_text(), name=name)
