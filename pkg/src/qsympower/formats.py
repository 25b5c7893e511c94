"""Text and JSON forms of elements: the CLI wire format."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra.element import BASES, Element, format_text, get_basis
from .compositions import Composition
from .errors import ParseError, QSymError

_PART = re.compile(r"\d+")


def element_to_json(f: Element) -> dict:
    return {
        "side": f.side,
        "basis": f.basis.name,
        "terms": [{"index": list(a), "coeff": str(c)} for a, c in f.items()],
    }


def element_from_json(doc, text: str = "") -> Element:
    if not isinstance(doc, dict) or "basis" not in doc or "terms" not in doc:
        raise ParseError(text, 0, "element documents need 'basis' and 'terms'")
    name = doc["basis"]
    if name not in BASES:
        raise ParseError(text, max(text.find(str(name)), 0), f"unknown basis {name!r}")
    basis = get_basis(name)
    if "side" in doc and doc["side"] != basis.side:
        raise ParseError(text, max(text.find('"side"'), 0), f"basis {name} lives on the {basis.side} side")
    terms = {}
    for term in doc["terms"]:
        try:
            alpha = Composition(term["index"])
            c = Fraction(str(term["coeff"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(text, 0, f"bad term {term!r}: {exc}") from None
        terms[alpha] = terms.get(alpha, 0) + c
    return Element(basis, terms)


def parse_composition(text: str, offset: int = 0, full: str | None = None) -> Composition:
    """Parse ``2,3,2``; positions in errors are reported relative to ``full``."""
    full = text if full is None else full
    if text.strip() == "":
        return Composition()
    parts, pos = [], 0
    for piece in text.split(","):
        stripped = piece.strip()
        where = offset + pos + (len(piece) - len(piece.lstrip()))
        if not _PART.fullmatch(stripped):
            raise ParseError(full, where, f"expected a positive integer, got {stripped!r}")
        if int(stripped) == 0:
            raise ParseError(full, where, "composition parts must be positive")
        parts.append(int(stripped))
        pos += len(piece) + 1
    return Composition(parts)


def parse_element(text: str) -> Element:
    """``Psi:2,3,2`` or a JSON element document."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(text, exc.pos, exc.msg) from None
        return element_from_json(doc, text)
    name, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(text, len(text), "expected 'Basis:parts'")
    if name.strip() not in BASES:
        raise ParseError(text, 0, f"unknown basis {name.strip()!r}; expected one of {', '.join(BASES)}")
    alpha = parse_composition(rest, len(name) + 1, text)
    return get_basis(name.strip())(alpha)


def to_jsonable(result):
    """Turn library results into plain JSON values."""
    if isinstance(result, Element):
        return element_to_json(result)
    if isinstance(result, Fraction):
        return str(result)
    if hasattr(result, "to_json"):
        return result.to_json()
    if isinstance(result, dict):
        return {str(k): to_jsonable(v) for k, v in result.items()}
    if isinstance(result, (list, tuple)):
        return [to_jsonable(v) for v in result]
    return result


def format_output(result, mode: str = "text") -> str:
    if mode == "json":
        return json.dumps(to_jsonable(result))
    if isinstance(result, Element):
        return format_text(result)
    if hasattr(result, "to_text"):
        return result.to_text()
    return str(result)


__all__ = [
    "ParseError",
    "QSymError",
    "element_from_json",
    "element_to_json",
    "format_output",
    "parse_composition",
    "parse_element",
    "to_jsonable",
]
