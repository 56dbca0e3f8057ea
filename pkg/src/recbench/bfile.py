"""Reading, writing, and fetching sequences in OEIS b-file format.

A b-file is a sequence of "index value" lines, optionally preceded or
interleaved with '#' comment lines; indices must increase by exactly 1.
Fetching goes through an injectable transport so tests never touch the
network, and the cache uses create-then-rename writes so concurrent
fetches of the same id are safe.
"""

import os
import tempfile
import urllib.error
import urllib.request

from .ore import Sequence


class MalformedLine(Exception):
    def __init__(self, lineno, line):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {line!r}")


class NonContiguousIndex(Exception):
    def __init__(self, lineno, expected, got):
        self.lineno = lineno
        self.expected = expected
        self.got = got
        super().__init__(f"line {lineno}: index {got}, expected {expected}")


class NetworkDisabled(Exception):
    pass


class FetchFailed(Exception):
    def __init__(self, status):
        self.status = status
        super().__init__(f"HTTP status {status}")


def parse_bfile(text, seq_id=None):
    """A Sequence from b-file text; offset = first data index."""
    offset = None
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(lineno, raw)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, raw)
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise NonContiguousIndex(lineno, offset + len(terms), index)
        terms.append(value)
    if offset is None:
        raise MalformedLine(0, "<no data lines>")
    return Sequence(offset, terms, id=seq_id, provenance="bfile")


def emit_bfile(seq):
    """B-file text for a Sequence (data lines only)."""
    return "".join(
        f"{seq.offset + i} {t}\n" for i, t in enumerate(seq.terms)
    )


def bfile_url(seq_id):
    return f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"


def _http_transport(url):
    """Default transport: one GET, returning (status, text)."""
    try:
        with urllib.request.urlopen(url, timeout=30) as resp:
            return resp.status, resp.read().decode()
    except urllib.error.HTTPError as e:
        return e.code, ""


def fetch_bfile(seq_id, cache_dir, network=True, transport=None):
    """The b-file for seq_id, from cache_dir or one HTTP GET.

    Returns the parsed Sequence.  A cache hit never invokes the
    transport; a miss with network disabled raises NetworkDisabled.
    """
    path = os.path.join(cache_dir, f"b{seq_id[1:]}.txt")
    if os.path.exists(path):
        with open(path) as f:
            return parse_bfile(f.read(), seq_id)
    if not network:
        raise NetworkDisabled(f"no cached b-file for {seq_id}")
    transport = transport or _http_transport
    status, text = transport(bfile_url(seq_id))
    if status != 200:
        raise FetchFailed(status)
    seq = parse_bfile(text, seq_id)  # validate before caching
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".part")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return seq
