"""Compartmented schemes: one extended Shamir level per threshold node.

A compartment's dealt value (a point or a crucial offset) becomes the
secret of the subtree below it. Redundant compartments receive copies
of one point, so any of them, but only one, counts at their parent.
Every node allocates its own x-coordinates 1..n_node.
"""
import logging
import time
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from shardkit.errors import (
    CrucialShareMissingError,
    InconsistentSharesError,
    InsufficientSharesError,
    ParameterError,
    ReconstructionError,
    SchemeMismatchError,
)
from shardkit.sharing.extended import deal_level, recover_level
from shardkit.sharing.field import FieldElement, OpCounter, RandomSource
from shardkit.sharing.scheme import (
    CrucialValue,
    ExtendedShare,
    Leaf,
    Path,
    Payload,
    PointValue,
    SchemeNode,
    ShareBundle,
    SlotKind,
    Threshold,
    iter_leaves,
    layout,
    node_slots,
    scheme_fingerprint,
    validate_tree,
)
from shardkit.sharing.sharing_logger import SharingLogger
from shardkit.utils import timer

logger = SharingLogger()


def deal_payloads(
    secret: FieldElement,
    root: Threshold,
    rng: RandomSource,
    counter: Optional[OpCounter] = None,
) -> Iterator[Tuple[Path, Leaf, Payload]]:
    """Leaf payloads in depth-first order. The tree must already be validated."""

    def deal(node: Threshold, value: FieldElement, path: Path):
        payloads = deal_level(value, node.k, node_slots(node), rng, counter)
        for i, (child, payload) in enumerate(zip(node.children, payloads)):
            child_path = path + (i,)
            if isinstance(child.node, Leaf):
                yield child_path, child.node, payload
            else:
                sub_secret = payload.value if isinstance(payload, CrucialValue) else payload.y
                yield from deal(child.node, sub_secret, child_path)

    return deal(root, secret, ())


@timer(log_level=logging.DEBUG)
def deal_tree(
    secret: FieldElement,
    root: SchemeNode,
    rng: RandomSource,
    counter: Optional[OpCounter] = None,
) -> ShareBundle:
    modulus = secret.modulus
    validate_tree(root, modulus)
    start = time.perf_counter()
    scheme_id = scheme_fingerprint(root)
    bundle = ShareBundle(modulus, scheme_id)
    for path, leaf, payload in deal_payloads(secret, root, rng, counter):
        bundle.shares.setdefault(leaf.holder, []).append(ExtendedShare(leaf.holder, payload, path))
    logger.log_deal(
        scheme_id, len(bundle.shares), sum(len(s) for s in bundle.shares.values()),
        time.perf_counter() - start,
    )
    return bundle


def _index_shares(bundle: ShareBundle, root: SchemeNode) -> Dict[Path, ExtendedShare]:
    leaves = dict(iter_leaves(root))
    by_path: Dict[Path, ExtendedShare] = {}
    for share in bundle.all_shares():
        leaf = leaves.get(share.path)
        if leaf is None or leaf.holder != share.holder:
            raise SchemeMismatchError(f"share of {share.holder} does not belong to this scheme", share.path)
        seen = by_path.setdefault(share.path, share)
        if seen.value != share.value:
            raise InconsistentSharesError(path=share.path)
    return by_path


@timer(log_level=logging.DEBUG)
def reconstruct_tree(
    bundle: ShareBundle,
    root: SchemeNode,
    counter: Optional[OpCounter] = None,
) -> FieldElement:
    """Recover every reachable compartment bottom-up, then the root secret.

    A compartment that lacks crucial shares or distinct points simply
    contributes nothing to its parent; inconsistent shares anywhere abort.
    """
    if not isinstance(root, Threshold):
        raise ParameterError("the root of a scheme must be a threshold node", ())
    if bundle.scheme_id != scheme_fingerprint(root):
        raise SchemeMismatchError(
            f"shares belong to scheme {bundle.scheme_id}, not {scheme_fingerprint(root)}"
        )
    start = time.perf_counter()
    by_path = _index_shares(bundle, root)
    modulus = bundle.modulus

    def recover(node: Threshold, path: Path) -> FieldElement:
        payloads: List[Payload] = []
        for i, (child, placement) in enumerate(zip(node.children, layout(node_slots(node)))):
            child_path = path + (i,)
            if isinstance(child.node, Leaf):
                share = by_path.get(child_path)
                if share is None:
                    continue
                value = share.value
            else:
                try:
                    value = recover(child.node, child_path)
                except (CrucialShareMissingError, InsufficientSharesError):
                    continue
            if placement.crucial_index is not None:
                payloads.append(CrucialValue(placement.crucial_index, value))
            else:
                payloads.append(PointValue(modulus.element(placement.x), value, child.group))
        r = sum(1 for c in node.children if c.kind is SlotKind.CRUCIAL)
        try:
            return recover_level(payloads, node.k, r, counter)
        except ReconstructionError as exc:
            if exc.path is not None:
                raise
            raise exc.at(path) from exc

    try:
        secret = recover(root, ())
    except ReconstructionError as exc:
        logger.log_reconstruct_failure(bundle.scheme_id, exc)
        raise
    logger.log_reconstruct_success(bundle.scheme_id, len(bundle.shares), time.perf_counter() - start)
    return secret


def tree_authorized(subset: Iterable[str], root: SchemeNode) -> bool:
    members = set(subset)

    def satisfied(node: SchemeNode) -> bool:
        if isinstance(node, Leaf):
            return node.holder in members
        points = set()
        for child, placement in zip(node.children, layout(node_slots(node))):
            ok = satisfied(child.node)
            if placement.crucial_index is not None:
                if not ok:
                    return False
            elif ok:
                points.add(placement.x)
        return len(points) >= node.k

    return satisfied(root)
