"""Machine-readable verdicts for identity checks.

A CheckReport is a flat list of items, one per verified identity (or per
identity instance, when a suite runs the same law over several module
tuples).  Identity ids are stable strings so reports stay diffable across
runs; a failing item carries the first counterexample found, as basis
indices plus both sides' coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """First counterexample of a failed identity.

    inputs are basis indices into the identity's domain legs, labels the
    matching basis names, lhs/rhs the two sides' coordinate vectors.
    """

    inputs: tuple
    labels: tuple
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class CheckItem:
    identity: str
    law: str
    passed: bool
    witness: Witness | None = None


@dataclass
class CheckReport:
    suite: str
    seed: int = 0
    items: list = field(default_factory=list)

    def ok(self):
        return all(item.passed for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.passed]

    def item(self, identity):
        for it in self.items:
            if it.identity == identity:
                return it
        raise KeyError(identity)

    def extend(self, other):
        self.items.extend(other.items)
        return self

    def add(self, identity, law, passed, witness=None):
        self.items.append(CheckItem(identity, law, passed, witness))

    def summary(self):
        bad = len(self.failures())
        return "%s: %d identities, %d failing" % (self.suite, len(self.items), bad)

    def __iter__(self):
        return iter(self.items)


def check_all_vectors(report, identity, law, dims, labeler, evaluate):
    """Quantify an identity over all basis tuples of the given domain dims.

    evaluate(idx_tuple) must return (lhs, rhs) coordinate sequences; the
    first mismatch becomes the witness.  Bilinearity of every structure map
    makes basis tuples sufficient.
    """
    for idx in itertools.product(*(range(d) for d in dims)):
        lhs, rhs = evaluate(idx)
        if tuple(lhs) != tuple(rhs):
            report.add(
                identity,
                law,
                False,
                Witness(tuple(idx), tuple(labeler(idx)), tuple(lhs), tuple(rhs)),
            )
            return False
    report.add(identity, law, True)
    return True


def check_matrix_equal(report, identity, law, lhs, rhs, dims=None, labeler=None):
    """Compare two LinearMaps column by column.

    dims, when given, decode a flattened domain column index back into a
    basis tuple for the witness; labeler maps that tuple to basis names.
    """
    if lhs.rows == rhs.rows and lhs.cols == rhs.cols and lhs.entries == rhs.entries:
        report.add(identity, law, True)
        return True
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        report.add(
            identity,
            law,
            False,
            Witness((), ("shape %dx%d vs %dx%d" % (lhs.rows, lhs.cols, rhs.rows, rhs.cols),), (), ()),
        )
        return False
    for j in range(lhs.cols):
        lc, rc = lhs.column(j), rhs.column(j)
        if lc != rc:
            idx = _decode(j, dims) if dims else (j,)
            labels = tuple(labeler(idx)) if labeler else tuple(str(i) for i in idx)
            report.add(identity, law, False, Witness(tuple(idx), labels, lc, rc))
            return False
    report.add(identity, law, True)
    return True


def _decode(flat, dims):
    idx = []
    for d in reversed(dims):
        idx.append(flat % d)
        flat //= d
    return tuple(reversed(idx))
