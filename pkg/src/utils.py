import csv
import hashlib
import io
import json


def canonical_json(obj):
    """Compact JSON with a fixed separator layout, so equal reports hash equally."""

    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def sha256_hex(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def to_csv(rows, columns, header=True):
    """One line per row dict (after a header line unless header=False), "\\n" line endings."""

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    if header:
        writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value
