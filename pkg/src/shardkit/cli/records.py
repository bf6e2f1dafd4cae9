"""Share files and the public metadata file.

A share file holds one record per line:

    v1 p=<p> scheme=<16 hex> path=<i.j.k> kind=<normal|crucial|redundant:G> x=<x or -> value=<v> holder=<id>

The metadata file starts with `v1 p=<p> scheme=<id>` and then lists
`holder=<id> path=<path>` for every leaf of the scheme.
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from shardkit.errors import SchemeMismatchError, SchemeParseError, format_path
from shardkit.sharing.field import PrimeModulus
from shardkit.sharing.scheme import (
    CrucialValue,
    ExtendedShare,
    Path,
    PointValue,
    SchemeNode,
    ShareBundle,
    iter_leaves,
    leaf_placements,
)

VERSION = "v1"

_DEC = r"0|[1-9][0-9]*"
_PATH = rf"-|(?:{_DEC})(?:\.(?:{_DEC}))*"
_ID = r"[A-Za-z_][A-Za-z0-9_]*"

_RECORD = re.compile(
    rf"v1 p=(?P<p>{_DEC}) scheme=(?P<scheme>[0-9a-f]{{16}}) path=(?P<path>{_PATH})"
    rf" kind=(?P<kind>normal|crucial|redundant:[A-Za-z0-9_]+) x=(?P<x>-|{_DEC})"
    rf" value=(?P<value>{_DEC}) holder=(?P<holder>{_ID})"
)
_HEADER = re.compile(rf"v1 p=(?P<p>{_DEC}) scheme=(?P<scheme>[0-9a-f]{{16}})")
_ENTRY = re.compile(rf"holder=(?P<holder>{_ID}) path=(?P<path>{_PATH})")


def parse_path(text: str) -> Path:
    return () if text == "-" else tuple(int(i) for i in text.split("."))


@dataclass(frozen=True)
class ShareRecord:
    p: int
    scheme_id: str
    path: Path
    kind: str
    x: Optional[int]
    value: int
    holder: str

    def format(self) -> str:
        x = "-" if self.x is None else str(self.x)
        return (
            f"{VERSION} p={self.p} scheme={self.scheme_id} path={format_path(self.path)}"
            f" kind={self.kind} x={x} value={self.value} holder={self.holder}"
        )

    @classmethod
    def parse(cls, line: str) -> "ShareRecord":
        match = _RECORD.fullmatch(line)
        if match is None:
            raise SchemeParseError(f"malformed share record: {line!r}")
        p = int(match["p"])
        x = None if match["x"] == "-" else int(match["x"])
        value = int(match["value"])
        if (match["kind"] == "crucial") != (x is None):
            raise SchemeParseError(f"crucial records and only those have x=-: {line!r}")
        if value >= p or (x is not None and not 0 < x < p):
            raise SchemeParseError(f"share record outside GF({p}): {line!r}")
        return cls(p, match["scheme"], parse_path(match["path"]), match["kind"], x, value, match["holder"])

    @classmethod
    def from_share(cls, share: ExtendedShare, bundle: ShareBundle) -> "ShareRecord":
        payload = share.payload
        tag = share.kind.value
        if isinstance(payload, PointValue) and payload.group is not None:
            tag = f"redundant:{payload.group}"
        x = payload.x.value if isinstance(payload, PointValue) else None
        return cls(bundle.modulus.p, bundle.scheme_id, share.path, tag, x, share.value.value, share.holder)


def bundle_records(bundle: ShareBundle) -> Dict[str, List[ShareRecord]]:
    """Records per holder, each list sorted by path."""
    return {
        holder: [ShareRecord.from_share(s, bundle) for s in sorted(shares, key=lambda s: s.path)]
        for holder, shares in bundle.shares.items()
    }


def parse_records(text: str) -> List[ShareRecord]:
    return [ShareRecord.parse(line) for line in text.split("\n") if line]


def format_records(records: Iterable[ShareRecord]) -> str:
    return "".join(r.format() + "\n" for r in records)


def records_to_bundle(records: Iterable[ShareRecord], root: SchemeNode) -> ShareBundle:
    """Rebuild the shares of `root` that the records describe.

    All records must agree on p and scheme id, and every record must sit
    on a leaf of `root` with the holder, kind and x that leaf was dealt.
    """
    records = list(records)
    if not records:
        raise SchemeMismatchError("no share records given")
    origins = {(r.p, r.scheme_id) for r in records}
    if len(origins) > 1:
        raise SchemeMismatchError(
            "share records come from different dealings: "
            + ", ".join(f"p={p} scheme={s}" for p, s in sorted(origins))
        )
    p, scheme_id = origins.pop()
    modulus = PrimeModulus(p)
    placed = leaf_placements(root)
    bundle = ShareBundle(modulus, scheme_id)
    for record in records:
        found = placed.get(record.path)
        if found is None:
            raise SchemeMismatchError(f"no leaf at path {format_path(record.path)}")
        leaf, slot, placement = found
        if (leaf.holder, slot.tag, placement.x) != (record.holder, record.kind, record.x):
            raise SchemeMismatchError(
                f"record of {record.holder} does not match the leaf dealt there", record.path
            )
        value = modulus.element(record.value)
        if placement.crucial_index is not None:
            payload = CrucialValue(placement.crucial_index, value)
        else:
            payload = PointValue(modulus.element(placement.x), value, slot.group)
        bundle.shares.setdefault(record.holder, []).append(ExtendedShare(record.holder, payload, record.path))
    return bundle


@dataclass(frozen=True)
class Metadata:
    p: int
    scheme_id: str
    leaves: Tuple[Tuple[str, Path], ...]

    @classmethod
    def for_scheme(cls, root: SchemeNode, bundle: ShareBundle) -> "Metadata":
        leaves = tuple((leaf.holder, path) for path, leaf in sorted(iter_leaves(root)))
        return cls(bundle.modulus.p, bundle.scheme_id, leaves)

    def format(self) -> str:
        lines = [f"{VERSION} p={self.p} scheme={self.scheme_id}"]
        lines.extend(f"holder={h} path={format_path(path)}" for h, path in self.leaves)
        return "".join(line + "\n" for line in lines)

    @classmethod
    def parse(cls, text: str) -> "Metadata":
        lines = [line for line in text.split("\n") if line]
        header = _HEADER.fullmatch(lines[0]) if lines else None
        if header is None:
            raise SchemeParseError("metadata must start with 'v1 p=<p> scheme=<id>'")
        leaves = []
        for line in lines[1:]:
            entry = _ENTRY.fullmatch(line)
            if entry is None:
                raise SchemeParseError(f"malformed metadata line: {line!r}")
            leaves.append((entry["holder"], parse_path(entry["path"])))
        return cls(int(header["p"]), header["scheme"], tuple(leaves))
