"""Minimal text extraction for simple, machine-generated PDFs.

This is the built-in implementation behind the pluggable PDF boundary. It
handles the common single-text-layer case: objects addressed by scanning
(no xref parsing), content streams compressed with FlateDecode and/or
ASCII85Decode, and text emitted through the ``Tj``/``TJ``/``'``/``"``
operators. Line structure follows ``Td``/``TD``/``T*``/``Tm`` moves.

Scanned PDFs, exotic encodings (CID fonts), and layout reconstruction are
out of scope; a full-featured extractor can be plugged in via the
``PdfTextExtractor`` protocol when one is available.
"""

from __future__ import annotations

import base64
import re
import zlib
from typing import Protocol

from ..errors import CorruptDocument, NoTextLayer

_OBJ_RE = re.compile(rb"(\d+)\s+(\d+)\s+obj\b")
_STREAM_START_RE = re.compile(rb"stream\r?\n")


class PdfTextExtractor(Protocol):
    def extract_pages(self, raw: bytes) -> list[list[str]]:
        """Return per-page line lists in reading order."""
        ...


class SimplePdfTextExtractor:
    """Stdlib-only extractor for simple text-layer PDFs."""

    def extract_pages(self, raw: bytes) -> list[list[str]]:
        if not raw.startswith(b"%PDF-"):
            raise CorruptDocument("missing %PDF header")
        objects = _parse_objects(raw)
        if not objects:
            raise CorruptDocument("no PDF objects found")
        page_refs = _ordered_page_refs(raw, objects)
        if not page_refs:
            raise CorruptDocument("no page objects found")
        pages: list[list[str]] = []
        any_text = False
        for ref in page_refs:
            body, _ = objects[ref]
            lines: list[str] = []
            for content_ref in _content_refs(body):
                if content_ref not in objects:
                    continue
                stream = _decode_stream(*objects[content_ref])
                if stream is None:
                    continue
                lines.extend(_text_lines(stream))
            if lines:
                any_text = True
            pages.append(lines)
        if not any_text:
            raise NoTextLayer("no text operators in any page content stream")
        return pages


def _parse_objects(raw: bytes) -> dict[int, tuple[bytes, bytes | None]]:
    """Map object number -> (body before stream, stream bytes or None)."""
    objects: dict[int, tuple[bytes, bytes | None]] = {}
    for m in _OBJ_RE.finditer(raw):
        num = int(m.group(1))
        end = raw.find(b"endobj", m.end())
        if end < 0:
            continue
        chunk = raw[m.end():end]
        sm = _STREAM_START_RE.search(chunk)
        if sm:
            stream_end = chunk.rfind(b"endstream")
            if stream_end < 0:
                continue
            body = chunk[:sm.start()]
            stream = chunk[sm.end():stream_end].rstrip(b"\r\n")
            objects[num] = (body, stream)
        else:
            objects[num] = (chunk, None)
    return objects


def _ordered_page_refs(raw: bytes, objects: dict) -> list[int]:
    """Page object numbers in page-tree order, falling back to scan order."""
    root = None
    for m in re.finditer(rb"/Root\s+(\d+)\s+\d+\s+R", raw):
        root = int(m.group(1))
    pages_root = None
    if root is not None and root in objects:
        pm = re.search(rb"/Pages\s+(\d+)\s+\d+\s+R", objects[root][0])
        if pm:
            pages_root = int(pm.group(1))

    refs: list[int] = []
    seen: set[int] = set()

    def walk(num: int) -> None:
        if num in seen or num not in objects:
            return
        seen.add(num)
        body = objects[num][0]
        if re.search(rb"/Type\s*/Pages\b", body):
            kids = re.search(rb"/Kids\s*\[(.*?)\]", body, re.S)
            if kids:
                for km in re.finditer(rb"(\d+)\s+\d+\s+R", kids.group(1)):
                    walk(int(km.group(1)))
        elif re.search(rb"/Type\s*/Page\b", body):
            refs.append(num)

    if pages_root is not None:
        walk(pages_root)
    if not refs:
        for num in sorted(objects):
            if re.search(rb"/Type\s*/Page\b", objects[num][0]):
                refs.append(num)
    return refs


def _content_refs(page_body: bytes) -> list[int]:
    m = re.search(rb"/Contents\s+(\d+)\s+\d+\s+R", page_body)
    if m:
        return [int(m.group(1))]
    m = re.search(rb"/Contents\s*\[(.*?)\]", page_body, re.S)
    if m:
        return [int(r.group(1)) for r in re.finditer(rb"(\d+)\s+\d+\s+R", m.group(1))]
    return []


def _decode_stream(body: bytes, stream: bytes | None) -> bytes | None:
    if stream is None:
        return None
    filters = [f.decode("latin-1") for f in re.findall(rb"/(\w+code)\b", body)]
    data = stream
    try:
        for filt in filters or []:
            if filt == "ASCII85Decode":
                trimmed = data.rstrip()
                data = base64.a85decode(trimmed, adobe=trimmed.endswith(b"~>"))
            elif filt == "FlateDecode":
                data = zlib.decompress(data)
            elif filt == "ASCIIHexDecode":
                data = bytes.fromhex(data.replace(b">", b"").decode("latin-1"))
            else:
                return None  # unsupported filter: skip this stream
        if not filters:
            # Streams may also be raw; keep as-is.
            pass
    except Exception:
        return None
    return data


_STRING_ESCAPES = {
    b"n": b"\n", b"r": b"\r", b"t": b"\t", b"b": b"\b", b"f": b"\f",
    b"(": b"(", b")": b")", b"\\": b"\\",
}


def _parse_literal_string(data: bytes, i: int) -> tuple[str, int]:
    """Parse a ``(...)`` string starting at index i (at the '('). """
    assert data[i:i + 1] == b"("
    out = bytearray()
    depth = 1
    i += 1
    while i < len(data) and depth > 0:
        ch = data[i:i + 1]
        if ch == b"\\":
            nxt = data[i + 1:i + 2]
            if nxt in _STRING_ESCAPES:
                out += _STRING_ESCAPES[nxt]
                i += 2
            elif nxt.isdigit():
                octal = data[i + 1:i + 4]
                j = 1
                while j <= 3 and data[i + j:i + j + 1].isdigit():
                    j += 1
                octal = data[i + 1:i + j]
                out.append(int(octal, 8) & 0xFF)
                i += 1 + len(octal)
            else:
                i += 2
        elif ch == b"(":
            depth += 1
            out += ch
            i += 1
        elif ch == b")":
            depth -= 1
            if depth > 0:
                out += ch
            i += 1
        else:
            out += ch
            i += 1
    return out.decode("latin-1"), i


def _text_lines(stream: bytes) -> list[str]:
    """Replay text operators, emitting one string per text line."""
    lines: list[str] = []
    current: list[str] = []
    operands: list[object] = []
    i = 0
    n = len(stream)

    def new_line() -> None:
        if current:
            lines.append("".join(current))
            current.clear()

    while i < n:
        ch = stream[i:i + 1]
        if ch in b" \t\r\n\0":
            i += 1
        elif ch == b"(":
            text, i = _parse_literal_string(stream, i)
            operands.append(text)
        elif ch == b"<" and stream[i + 1:i + 2] != b"<":
            j = stream.find(b">", i)
            if j < 0:
                break
            hexes = re.sub(rb"\s", b"", stream[i + 1:j])
            if len(hexes) % 2:
                hexes += b"0"
            try:
                operands.append(bytes.fromhex(hexes.decode("latin-1")).decode("latin-1"))
            except ValueError:
                operands.append("")
            i = j + 1
        elif ch == b"[":
            operands.append("[")
            i += 1
        elif ch == b"]":
            # Collapse an array of strings/kerning numbers into one string.
            parts: list[str] = []
            while operands and operands[-1] != "[":
                top = operands.pop()
                if isinstance(top, str):
                    parts.append(top)
            if operands:
                operands.pop()
            operands.append("".join(reversed(parts)))
            i += 1
        elif ch == b"<" or ch == b">":
            i += 2  # dictionary delimiters inside streams: skip
        elif ch == b"/":
            m = re.match(rb"/[^\s\[\]()<>/]*", stream[i:])
            operands.append(m.group().decode("latin-1"))
            i += m.end()
        elif re.match(rb"[-+.\d]", ch):
            m = re.match(rb"[-+.\dEe]+", stream[i:])
            try:
                operands.append(float(m.group()))
            except ValueError:
                operands.append(0.0)
            i += m.end()
        else:
            m = re.match(rb"[A-Za-z'\"*]+", stream[i:])
            if not m:
                i += 1
                continue
            op = m.group().decode("latin-1")
            i += m.end()
            if op in ("Tj",):
                if operands and isinstance(operands[-1], str):
                    current.append(operands[-1])
            elif op == "TJ":
                if operands and isinstance(operands[-1], str):
                    current.append(operands[-1])
            elif op == "'":
                new_line()
                if operands and isinstance(operands[-1], str):
                    current.append(operands[-1])
            elif op == '"':
                new_line()
                if operands and isinstance(operands[-1], str):
                    current.append(operands[-1])
            elif op in ("T*",):
                new_line()
            elif op in ("Td", "TD"):
                if len(operands) >= 2 and isinstance(operands[-1], float):
                    ty = operands[-1]
                    if ty != 0:
                        new_line()
            elif op == "Tm":
                new_line()
            elif op in ("BT", "ET"):
                new_line()
            operands.clear()
    new_line()
    return [ln for ln in lines if ln.strip()]
