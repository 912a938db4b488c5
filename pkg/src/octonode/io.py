"""Input files: ideals, section triples and curve map specs.

All three share a line format: ``key: value`` header lines, ``#`` comments
and blank lines ignored.  Polynomials use the text grammar of
:mod:`octonode.core.parsing`.  Errors carry the 1-based line number.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core.field import FieldSpec
from .core.parsing import parse_polynomial
from .core.polynomial import Polynomial, Ring
from .errors import ParseError, PreconditionError


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, raw, line


def _split_key(line: str) -> tuple[str | None, str]:
    head, sep, rest = line.partition(":")
    if sep and head.strip().isidentifier() and head.strip() != "":
        return head.strip().lower(), rest.strip()
    return None, line


def _parse_at(text: str, raw: str, ring: Ring, no: int) -> Polynomial:
    try:
        return parse_polynomial(text, ring)
    except ParseError as e:
        offset = raw.find(text)
        pos = None if e.position is None else e.position + max(offset, 0)
        raise ParseError(e.message, position=pos, line=no) from None


def _field(value: str, no: int) -> FieldSpec:
    try:
        return FieldSpec.parse(value)
    except ValueError as e:
        raise ParseError(str(e), line=no) from None


def _variables(value: str, no: int) -> list[str]:
    names = value.replace(",", " ").split()
    if not names or any(not n.isidentifier() for n in names) or len(set(names)) != len(names):
        raise ParseError(f"bad variable list {value!r}", line=no)
    return names


@dataclass
class IdealFile:
    ring: Ring
    polynomials: list[Polynomial]
    field_given: bool


def parse_ideal_text(text: str, field: FieldSpec | None = None) -> IdealFile:
    """``vars:`` header, optional ``field:``, then one polynomial per line.

    ``field`` overrides the file's field line.
    """
    names = None
    file_field = None
    rows = []
    for no, raw, line in _lines(text):
        key, value = _split_key(line)
        if key == "vars":
            names = _variables(value, no)
        elif key == "field":
            file_field = _field(value, no)
        elif key is not None:
            raise ParseError(f"unknown header {key!r}", line=no)
        else:
            if names is None:
                raise ParseError("polynomial before the 'vars:' header", line=no)
            rows.append((no, raw, line))
    if names is None:
        raise ParseError("missing 'vars:' header", line=1)
    ring = Ring(names, field or file_field or FieldSpec())
    polys = [_parse_at(line, raw, ring, no) for no, raw, line in rows]
    return IdealFile(ring, polys, file_field is not None)


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def load_ideal(path, field: FieldSpec | None = None) -> IdealFile:
    return parse_ideal_text(_read(path), field)


def parse_triple_text(text: str, field: FieldSpec | None = None):
    """``a: N`` plus ``f:``, ``g:``, ``h:`` lines; optional ``vars:`` (default z0..z3) and ``field:``."""
    from .octic.triple import Z_VARS, SectionTriple

    names = list(Z_VARS)
    file_field = None
    a = None
    entries: dict[str, tuple[int, str, str]] = {}
    for no, raw, line in _lines(text):
        key, value = _split_key(line)
        if key == "vars":
            names = _variables(value, no)
            if len(names) != 4:
                raise ParseError("a section triple needs exactly four variables", line=no)
        elif key == "field":
            file_field = _field(value, no)
        elif key == "a":
            try:
                a = int(value)
            except ValueError:
                raise ParseError(f"bad split type {value!r}", line=no) from None
        elif key in ("f", "g", "h"):
            if key in entries:
                raise ParseError(f"duplicate '{key}:' line", line=no)
            entries[key] = (no, raw, value)
        else:
            raise ParseError(f"unexpected line {line!r}", line=no)
    if a is None:
        raise ParseError("missing 'a:' line", line=1)
    missing = [k for k in "fgh" if k not in entries]
    if missing:
        raise ParseError(f"missing '{missing[0]}:' line", line=1)
    ring = Ring(names, field or file_field or FieldSpec())
    polys = {k: _parse_at(v, raw, ring, no) for k, (no, raw, v) in entries.items()}
    try:
        return SectionTriple(a, polys["f"], polys["g"], polys["h"])
    except PreconditionError as e:
        raise ParseError(str(e), line=entries["f"][0]) from None


def load_triple(path, field: FieldSpec | None = None):
    return parse_triple_text(_read(path), field)


def parse_curve_spec_text(text: str, field: FieldSpec | None = None):
    """``source:``, optional ``target:`` and ``field:``, one ``curve:`` line and four ``component:`` lines."""
    from .curves.implicit import TARGET_VARS, CurveMapSpec

    source = None
    target = list(TARGET_VARS)
    file_field = None
    curve = None
    comps = []
    for no, raw, line in _lines(text):
        key, value = _split_key(line)
        if key == "source":
            source = _variables(value, no)
        elif key == "target":
            target = _variables(value, no)
        elif key == "field":
            file_field = _field(value, no)
        elif key == "curve":
            curve = (no, raw, value)
        elif key == "component":
            comps.append((no, raw, value))
        else:
            raise ParseError(f"unexpected line {line!r}", line=no)
    if source is None:
        raise ParseError("missing 'source:' header", line=1)
    if curve is None:
        raise ParseError("missing 'curve:' line", line=1)
    if len(comps) != len(target):
        raise ParseError(f"expected {len(target)} 'component:' lines, found {len(comps)}", line=1)
    if set(source) & set(target):
        raise ParseError("source and target variables overlap", line=1)
    ring = Ring(source, field or file_field or FieldSpec())
    C = _parse_at(curve[2], curve[1], ring, curve[0])
    cs = tuple(_parse_at(v, raw, ring, no) for no, raw, v in comps)
    try:
        return CurveMapSpec(C, cs, tuple(target))
    except PreconditionError as e:
        raise ParseError(str(e), line=curve[0]) from None


def load_curve_spec(path, field: FieldSpec | None = None):
    return parse_curve_spec_text(_read(path), field)


def format_triple(t, field_line: bool = True) -> str:
    from .core.parsing import format_polynomial

    out = [f"vars: {' '.join(t.ring.variables)}"]
    if field_line:
        F = t.ring.field
        out.append(f"field: fp {F.p}" if F.p else "field: q")
    out.append(f"a: {t.a}")
    for k, p in zip("fgh", t.polynomials):
        out.append(f"{k}: {format_polynomial(p)}")
    return "\n".join(out) + "\n"
