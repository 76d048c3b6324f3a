"""Loading of the embedded coefficient tables.

Both files are checksummed so that a corrupted table fails loudly.
Set ``GRIESS_DATA_DIR`` to read the files from another directory.
"""
import hashlib
import os
from functools import lru_cache
from pathlib import Path

from .errors import ChecksumMismatch, DataFileMissing, ParseError
from .exact import Poly

CHECKSUMS = {
    "appendix_a.txt": "0ad91872b0ed00fdc7687c3ec84b3a46ef62e01dceddac95c15c6499abc76a22",
    "appendix_b.txt": "6673a30bc2ddec2ed92dc2b24fc7c5499be02ce7d02d0a647c610f3cad6f9554",
}


def data_dir() -> Path:
    env = os.environ.get("GRIESS_DATA_DIR")
    return Path(env) if env else Path(__file__).with_name("data")


def read_data_file(name: str, verify: bool = True, directory=None) -> str:
    path = Path(directory) if directory is not None else data_dir()
    path = path / name
    if not path.is_file():
        raise DataFileMissing(f"data file not found: {path}")
    raw = path.read_bytes()
    if verify and name in CHECKSUMS:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != CHECKSUMS[name]:
            raise ChecksumMismatch(f"{path}: sha256 {digest} does not match the shipped table")
    return raw.decode("utf-8")


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_appendix_a(text: str) -> dict:
    """{(m, parts): Poly} from ``A <m> [<parts>] <poly>`` lines."""
    out = {}
    for lineno, line in _content_lines(text):
        fields = line.split(None, 3)
        if len(fields) != 4 or fields[0] != "A":
            raise ParseError(f"appendix_a.txt line {lineno}: {line!r}")
        try:
            m = int(fields[1])
            parts = tuple(int(x) for x in fields[2].strip("[]").split(","))
        except ValueError as exc:
            raise ParseError(f"appendix_a.txt line {lineno}: {exc}") from None
        out[(m, parts)] = Poly.parse(fields[3])
    return out


def parse_appendix_b(text: str):
    """Returns (F, E, SYM) with F[k][id], E[t][j] Polys and SYM[k][name] strings."""
    f_tab, e_tab, sym = {}, {}, {}
    for lineno, line in _content_lines(text):
        fields = line.split(None, 3)
        if len(fields) != 4:
            raise ParseError(f"appendix_b.txt line {lineno}: {line!r}")
        kind, deg, key, rest = fields
        if kind == "SYM":
            sym.setdefault(int(deg), {})[key] = rest
        elif kind == "F":
            f_tab.setdefault(int(deg), {})[key] = Poly.parse(rest)
        elif kind == "E":
            e_tab.setdefault(int(deg), {})[int(key)] = Poly.parse(rest)
        else:
            raise ParseError(f"appendix_b.txt line {lineno}: unknown record {kind!r}")
    return f_tab, e_tab, sym


@lru_cache(maxsize=None)
def _cached(name):
    return read_data_file(name)


def appendix_a() -> dict:
    return parse_appendix_a(_cached("appendix_a.txt"))


def appendix_b():
    return parse_appendix_b(_cached("appendix_b.txt"))
