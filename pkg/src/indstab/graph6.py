"""graph6 text encoding of undirected graphs.

The format packs the upper triangle of the adjacency matrix, read column by
column ((0,1), (0,2), (1,2), (0,3), ...), into 6-bit chunks offset by 63 into
printable ASCII.  Vertex counts up to 62 use a single leading size byte;
63 and 64 use the '~' escape with an 18-bit size.  One graph per line, files
are UTF-8 and newline-terminated.
"""

from __future__ import annotations

from indstab.graphs import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def g6_encode(g: Graph) -> str:
    """Encode a labeled graph as a graph6 string."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    buf = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            buf = (buf << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + buf))
                buf = nbits = 0
    if nbits:
        out.append(chr(63 + (buf << (6 - nbits))))
    return "".join(out)


def g6_decode(text: str) -> Graph:
    """Decode a graph6 string; rejects malformed input loudly."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:  # '~' escape: 18-bit vertex count follows
        if len(vals) < 4:
            raise ValueError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} outside [1, {MAX_VERTICES}]")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}"
        )
    bits = 0
    for v in body:
        bits = (bits << 6) | v
    pad = len(body) * 6 - need
    if pad and bits & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 body")
    bits >>= pad
    adj = [0] * n
    pos = need - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph._wrap(n, tuple(adj))


def read_graph6(path: str) -> list[Graph]:
    """Read a file of graph6 lines; blank lines are skipped."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(g6_decode(line))
    return out
