"""Scheme trees, share slots and dealt share bundles.

A scheme is a tree of threshold nodes. Each child of a node is tagged
normal, crucial or redundant(group); leaves name shareholders. A node
whose children are all leaves is exactly one extended Shamir level.
"""
import hashlib
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from shardkit.errors import ParameterError
from shardkit.sharing.field import FieldElement, PrimeModulus

Path = Tuple[int, ...]


class SlotKind(str, Enum):
    NORMAL = "normal"
    CRUCIAL = "crucial"
    REDUNDANT = "redundant"


@dataclass(frozen=True)
class ShareSlot:
    holder: str
    kind: SlotKind = SlotKind.NORMAL
    group: Optional[str] = None

    def __post_init__(self):
        if (self.kind is SlotKind.REDUNDANT) != (self.group is not None):
            raise ParameterError("a group id is given exactly for redundant slots")

    @property
    def tag(self) -> str:
        if self.kind is SlotKind.REDUNDANT:
            return f"redundant:{self.group}"
        return self.kind.value


@dataclass(frozen=True)
class CrucialValue:
    index: int
    value: FieldElement


@dataclass(frozen=True)
class PointValue:
    x: FieldElement
    y: FieldElement
    group: Optional[str] = None


Payload = Union[CrucialValue, PointValue]


@dataclass(frozen=True)
class ExtendedShare:
    holder: str
    payload: Payload
    path: Path = ()

    @property
    def kind(self) -> SlotKind:
        if isinstance(self.payload, CrucialValue):
            return SlotKind.CRUCIAL
        return SlotKind.REDUNDANT if self.payload.group is not None else SlotKind.NORMAL

    @property
    def value(self) -> FieldElement:
        if isinstance(self.payload, CrucialValue):
            return self.payload.value
        return self.payload.y


@dataclass(frozen=True)
class Leaf:
    holder: str


@dataclass(frozen=True)
class Child:
    node: "SchemeNode"
    kind: SlotKind = SlotKind.NORMAL
    group: Optional[str] = None

    def __post_init__(self):
        if (self.kind is SlotKind.REDUNDANT) != (self.group is not None):
            raise ParameterError("a group id is given exactly for redundant children")


@dataclass(frozen=True)
class Threshold:
    k: int
    children: Tuple[Child, ...]


SchemeNode = Union[Leaf, Threshold]


@dataclass(frozen=True)
class SlotPlacement:
    """Where one slot's value comes from: crucial offset i, or the point at x."""
    crucial_index: Optional[int] = None
    x: Optional[int] = None


def layout(slots: Iterable[ShareSlot]) -> List[SlotPlacement]:
    """Crucial slots are numbered 1..r; normal slots and first members of a
    redundant group take x = 1, 2, ... in issuance order."""
    placements = []
    crucial = 0
    next_x = 1
    group_x: Dict[str, int] = {}
    for slot in slots:
        if slot.kind is SlotKind.CRUCIAL:
            crucial += 1
            placements.append(SlotPlacement(crucial_index=crucial))
        elif slot.kind is SlotKind.REDUNDANT and slot.group in group_x:
            placements.append(SlotPlacement(x=group_x[slot.group]))
        else:
            if slot.kind is SlotKind.REDUNDANT:
                group_x[slot.group] = next_x
            placements.append(SlotPlacement(x=next_x))
            next_x += 1
    return placements


def node_slots(node: Threshold) -> List[ShareSlot]:
    """One slot per child; leaves use their holder, compartments `#<index>`."""
    return [
        ShareSlot(c.node.holder if isinstance(c.node, Leaf) else f"#{i}", c.kind, c.group)
        for i, c in enumerate(node.children)
    ]


def distinct_points(node: Threshold) -> int:
    return len({pl.x for pl in layout(node_slots(node)) if pl.x is not None})


def iter_nodes(root: SchemeNode, path: Path = ()) -> Iterator[Tuple[Path, SchemeNode]]:
    yield path, root
    if isinstance(root, Threshold):
        for i, child in enumerate(root.children):
            yield from iter_nodes(child.node, path + (i,))


def iter_leaves(root: SchemeNode) -> Iterator[Tuple[Path, Leaf]]:
    for path, node in iter_nodes(root):
        if isinstance(node, Leaf):
            yield path, node


def leaf_placements(root: SchemeNode) -> Dict[Path, Tuple[Leaf, ShareSlot, SlotPlacement]]:
    """Every leaf with the slot and placement it gets from its parent."""
    placed = {}
    for path, node in iter_nodes(root):
        if not isinstance(node, Threshold):
            continue
        slots = node_slots(node)
        for i, (child, slot, placement) in enumerate(zip(node.children, slots, layout(slots))):
            if isinstance(child.node, Leaf):
                placed[path + (i,)] = (child.node, slot, placement)
    return placed


def holders(root: SchemeNode) -> List[str]:
    return sorted({leaf.holder for _, leaf in iter_leaves(root)})


def shares_per_holder(root: SchemeNode) -> Dict[str, int]:
    return dict(Counter(leaf.holder for _, leaf in iter_leaves(root)))


def total_shares(root: SchemeNode) -> int:
    return sum(1 for _ in iter_leaves(root))


def is_flat(root: SchemeNode) -> bool:
    return isinstance(root, Threshold) and all(isinstance(c.node, Leaf) for c in root.children)


def randomness_dimension(root: SchemeNode) -> int:
    """Uniform draws consumed by one dealing: r + k − 1 per threshold node."""
    total = 0
    for _, node in iter_nodes(root):
        if isinstance(node, Threshold):
            r = sum(1 for c in node.children if c.kind is SlotKind.CRUCIAL)
            total += r + node.k - 1
    return total


def canonical(node: SchemeNode) -> str:
    """One-line rendering; the fingerprint is taken over this text."""
    if isinstance(node, Leaf):
        return f"leaf {node.holder}"
    parts = []
    for child in node.children:
        prefix = ""
        if child.kind is SlotKind.CRUCIAL:
            prefix = "crucial "
        elif child.kind is SlotKind.REDUNDANT:
            prefix = f"redundant({child.group}) "
        parts.append(prefix + canonical(child.node))
    return f"threshold(k={node.k}) {{ {' '.join(parts)} }}"


def scheme_fingerprint(root: SchemeNode) -> str:
    digest = hashlib.sha256(canonical(root).encode("utf-8")).digest()
    return digest[:8].hex()


def validate_tree(root: SchemeNode, modulus: PrimeModulus) -> None:
    """Raise ParameterError (with node path) for any node that cannot be dealt."""
    if not isinstance(root, Threshold):
        raise ParameterError("the root of a scheme must be a threshold node", ())
    for path, node in iter_nodes(root):
        if isinstance(node, Threshold):
            try:
                validate_slots(node.k, node_slots(node), modulus)
            except ParameterError as exc:
                raise exc.at(path) from exc


def validate_slots(k: int, slots: List[ShareSlot], modulus: PrimeModulus) -> None:
    if not slots:
        raise ParameterError("a threshold node needs at least one child")
    groups = Counter(s.group for s in slots if s.kind is SlotKind.REDUNDANT)
    for group, members in sorted(groups.items()):
        if members < 2:
            raise ParameterError(f"redundant group {group} has a single member")
    if all(s.kind is SlotKind.CRUCIAL for s in slots):
        raise ParameterError(
            "a scheme of crucial shares only has no polynomial; use deal_additive instead"
        )
    if k < 1:
        raise ParameterError("k must be at least 1 when normal or redundant shares exist")
    points = len({pl.x for pl in layout(slots) if pl.x is not None})
    if points < k:
        raise ParameterError(f"k={k} exceeds the {points} distinct evaluation points")
    if points > modulus.p - 1:
        raise ParameterError(f"{points} distinct evaluation points do not fit in GF({modulus.p})")


@dataclass
class ShareBundle:
    modulus: PrimeModulus
    scheme_id: str
    shares: Dict[str, List[ExtendedShare]] = field(default_factory=dict)

    def subset(self, holder_ids: Iterable[str]) -> "ShareBundle":
        wanted = set(holder_ids)
        return ShareBundle(
            self.modulus,
            self.scheme_id,
            {h: list(s) for h, s in self.shares.items() if h in wanted},
        )

    def all_shares(self) -> List[ExtendedShare]:
        return sorted(
            (s for shares in self.shares.values() for s in shares),
            key=lambda s: s.path,
        )
