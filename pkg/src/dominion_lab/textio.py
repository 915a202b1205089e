"""Plain-text formats for monoids, congruences, homomorphisms, witnesses and dominions.

Monoid blocks look like::

    monoid <name>
    order <k>
    neutral <i>
    labels <l0> <l1> ...        (optional)
    table
    <k rows of k indices>
    end
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .monoid import FiniteMonoid, MonoidLawError, validate
from .morphisms import Congruence, Homomorphism
from .zigzag import ZigzagWitness


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def dump_monoid(M: FiniteMonoid) -> str:
    lines = [f"monoid {M.name}", f"order {M.order}", f"neutral {M.neutral}"]
    if M.labels is not None:
        lines.append("labels " + " ".join(M.labels))
    lines.append("table")
    lines.extend(" ".join(map(str, row)) for row in M.table)
    lines.append("end")
    return "\n".join(lines) + "\n"


def _ints(tokens, lineno, what):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer entry in {what}") from None


def iter_monoids(text: str) -> Iterator[FiniteMonoid]:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    pos = 0

    def take(keyword):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 0
            raise ParseError(last, f"unexpected end of input, expected '{keyword}'")
        lineno, ln = lines[pos]
        head, _, rest = ln.partition(" ")
        if head != keyword:
            raise ParseError(lineno, f"expected '{keyword}', got {ln!r}")
        pos += 1
        return lineno, rest.strip()

    while pos < len(lines):
        start, name = take("monoid")
        lineno, rest = take("order")
        order = _ints([rest], lineno, "order")[0]
        if order < 1:
            raise ParseError(lineno, "order must be positive")
        lineno, rest = take("neutral")
        neutral = _ints([rest], lineno, "neutral")[0]
        labels = None
        if pos < len(lines) and lines[pos][1].split()[0] == "labels":
            lineno, rest = take("labels")
            labels = rest.split()
            if len(labels) != order:
                raise ParseError(lineno, f"expected {order} labels, got {len(labels)}")
        take("table")
        rows = []
        for r in range(order):
            if pos >= len(lines):
                raise ParseError(lines[-1][0], f"table row {r} missing")
            lineno, ln = lines[pos]
            row = _ints(ln.split(), lineno, f"table row {r}")
            if len(row) != order:
                raise ParseError(lineno, f"table row {r} has {len(row)} entries, expected {order}")
            rows.append(row)
            pos += 1
        take("end")
        try:
            yield validate(rows, neutral, labels, name or "M")
        except MonoidLawError as exc:
            raise ParseError(start, f"monoid {name!r} invalid ({exc.law}): {exc}") from exc


def parse_monoids(text: str) -> list[FiniteMonoid]:
    return list(iter_monoids(text))


def parse_monoid(text: str) -> FiniteMonoid:
    ms = parse_monoids(text)
    if len(ms) != 1:
        raise ParseError(1, f"expected exactly one monoid, found {len(ms)}")
    return ms[0]


def load_monoid(path: str | Path) -> FiniteMonoid:
    return parse_monoid(Path(path).read_text())


def dump_congruence(theta: Congruence, name: str = "theta") -> str:
    blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in theta.blocks())
    return f"cong {name} blocks: {blocks}"


def dump_hom(h: Homomorphism, name: str = "h") -> str:
    return f"hom {name} {h.source.name} -> {h.target.name} map: " + " ".join(map(str, h.map))


def dump_witness(w: ZigzagWitness) -> str:
    def seq(xs):
        return " ".join(map(str, xs))

    return f"zigzag n={w.n} args: {seq(w.args)} z: {seq(w.spine_z)} w: {seq(w.spine_w)} value: {w.value}"


def dump_dominion(B_name: str, A: Iterable[int], elements: Iterable[int], method: str) -> str:
    A_text = "{" + ", ".join(map(str, sorted(A))) + "}"
    D_text = "{" + ", ".join(map(str, sorted(elements))) + "}"
    return f"dominion {B_name} over {A_text}: {D_text} method: {method}"
