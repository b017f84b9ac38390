"""
hypercut Graph Loader Module
============================
Reader and writer for the unweighted hMETIS ``.hgr`` format.

Format:
    m n
    <m lines of space-separated 1-based vertex ids>

Lines starting with ``%`` are comments; blank lines are skipped. Internally
vertices are 0-based.
"""

import io
import logging
import os
import tempfile
from typing import Iterable, List, TextIO, Union

from hypercut.core import Hypergraph, build
from hypercut.errors import ParseError
from hypercut.validation import check_output_path

logger = logging.getLogger(__name__)

COMMENT_PREFIX = "%"


# --- Public API ---

def read_hgr(stream: Union[str, TextIO], drop_singletons: bool = False) -> Hypergraph:
    """
    Parse ``.hgr`` text into a simple Hypergraph.

    Args:
        stream: Text or a readable text stream.
        drop_singletons: Drop size-1 hyperedges instead of failing.

    Returns:
        Hypergraph with 0-based ids and allow_multi = False.

    Raises:
        ParseError: On a malformed header, non-integer tokens, out-of-range
            ids, or a body whose line count differs from the header.
        DuplicateHyperedge / SingletonHyperedge: From build validation.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    lines = _content_lines(stream)

    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError("Input is empty; expected an 'm n' header.") from None

    counts = _parse_ints(header, header_no)
    if len(counts) < 2:
        raise ParseError(f"Header must hold 'm n', got '{header}'.", header_no)
    if len(counts) > 2 and counts[2] != 0:
        raise ParseError(
            f"Weighted formats (fmt={counts[2]}) are not supported.", header_no
        )
    m, n = counts[0], counts[1]
    if m < 0 or n < 0:
        raise ParseError(f"Counts must be non-negative, got m={m} n={n}.", header_no)

    raw_edges: List[List[int]] = []
    for line_no, text in lines:
        if len(raw_edges) == m:
            raise ParseError(
                f"Header declares {m} hyperedges but more lines follow.", line_no
            )
        ids = _parse_ints(text, line_no)
        for v in ids:
            if v < 1 or v > n:
                raise ParseError(f"Vertex id {v} is outside 1..{n}.", line_no)
        raw_edges.append([v - 1 for v in ids])

    if len(raw_edges) != m:
        raise ParseError(
            f"Header declares {m} hyperedges but the body has {len(raw_edges)}."
        )

    G = build(n, raw_edges, allow_multi=False, drop_singletons=drop_singletons)
    logger.debug("Parsed hypergraph: %r", G)
    return G


def write_hgr(G: Hypergraph) -> str:
    """Render G as ``.hgr`` text with 1-based ids, edges in stored order."""
    out = [f"{G.m} {G.n}\n"]
    for e in G.edges:
        out.append(" ".join(str(v + 1) for v in e))
        out.append("\n")
    return "".join(out)


def load_hgr(path: str, drop_singletons: bool = False) -> Hypergraph:
    """
    Load a ``.hgr`` file from disk.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: If the file cannot be read or parsed.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Hypergraph file not found at: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return read_hgr(f, drop_singletons=drop_singletons)
    except (IOError, OSError, UnicodeDecodeError) as e:
        raise ParseError(f"Cannot read hypergraph file {path}: {e}") from e


def save_hgr(G: Hypergraph, path: str) -> str:
    """Write G to ``path`` atomically and return the absolute path."""
    return write_text_atomic(write_hgr(G), path, prefix="hgr_")


def write_text_atomic(text: str, path: str, prefix: str = "out_") -> str:
    """
    Write text through a temp file in the target directory, then rename.

    Returns:
        Absolute path of the written file.
    """
    resolved = check_output_path(path)
    dir_name = os.path.dirname(resolved)
    os.makedirs(dir_name, exist_ok=True)

    tmp_path = None
    try:
        fd, tmp_path = tempfile.mkstemp(suffix=".tmp", prefix=prefix, dir=dir_name)
        with os.fdopen(fd, "w", encoding="utf-8") as tmp_file:
            tmp_file.write(text)
        os.replace(tmp_path, resolved)
        tmp_path = None
    except Exception:
        if tmp_path and os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise

    return resolved


# --- Parsing helpers ---

def _content_lines(stream: Iterable[str]):
    """Yield (1-based line number, stripped text) for non-comment lines."""
    for line_no, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith(COMMENT_PREFIX):
            continue
        yield line_no, text


def _parse_ints(text: str, line_no: int) -> List[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(f"Expected integers, got '{text}'.", line_no) from None
