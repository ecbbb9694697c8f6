"""Entailment for G-dependence atoms.

The calculus has axioms A0, A1 and rules R0, R0', R1, R2.  Derivability of a
single-antecedent atom gdep(v, W) from a normalized premise set reduces to a
least fixpoint: start from W and keep adding u whenever some premise
gdep(u, Z) has Z already inside the set.  gdep(v, W) is derivable iff v ends
up in the set.  When it does not, the two-row binary team whose rows differ
exactly outside the set satisfies every premise and refutes the goal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .atoms import GAtom, normalize, sorted_atoms, variables_of
from .errors import ContractError, ParseError, SizeError
from .team import Team, binary_pair_team, check_gdep

PREMISE = "Premise"
A0 = "A0"
A1 = "A1"
R0 = "R0"
R0P = "R0'"
R1 = "R1"
R2 = "R2"
RULES = (PREMISE, A0, A1, R0, R0P, R1, R2)

ORACLE_LIMIT = 20
CLOSURE_LIMIT = 12


@dataclass(frozen=True)
class Derivation:
    conclusion: GAtom
    rule: str
    premises: tuple["Derivation", ...] = ()

    def __post_init__(self):
        if type(self.premises) is not tuple:
            object.__setattr__(self, "premises", tuple(self.premises))

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def leaves(self):
        if not self.premises:
            yield self
        for p in self.premises:
            yield from p.leaves()

    def format(self, indent: int = 0) -> str:
        lines = []
        stack = [(self, indent)]
        while stack:
            node, depth = stack.pop()
            lines.append(f"{'  ' * depth}{node.rule}: {node.conclusion}")
            stack.extend((p, depth + 1) for p in reversed(node.premises))
        return "\n".join(lines) + "\n"

    __str__ = format


@dataclass(frozen=True)
class CounterModel:
    team: Team
    differing: frozenset


@dataclass(frozen=True)
class EntailmentResult:
    verdict: bool
    derivation: Optional[Derivation] = None
    counter_model: Optional[CounterModel] = None

    @property
    def witness(self):
        return self.derivation if self.verdict else self.counter_model

    def __bool__(self):
        return self.verdict


# -- premise preparation -------------------------------------------------------

class _Premises:
    """Normalized premises in canonical order with watch lists for the fixpoint."""

    def __init__(self, sigma: frozenset):
        source: dict[GAtom, GAtom] = {}
        # singleton premises first so they are preferred as their own source
        for s in sorted(sigma, key=lambda a: (len(a.lhs) != 1, a.sort_key())):
            for t in normalize(s) if s.lhs else ():
                source.setdefault(t, s)
        self.atoms = sorted_atoms(source)
        self.source = source
        self.heads = [a.antecedent for a in self.atoms]
        self.sizes = [len(a.rhs) for a in self.atoms]
        self.watch: dict[str, list[int]] = {}
        for k, a in enumerate(self.atoms):
            for z in sorted(a.rhs):
                self.watch.setdefault(z, []).append(k)

    def closure(self, w: Iterable[str]) -> dict:
        """Least fixpoint from seed set w.  Maps each member to the index of
        the premise that added it, or None for seeds."""
        reason: dict[str, Optional[int]] = {}
        queue = deque()
        for v in sorted(w):
            reason[v] = None
            queue.append(v)
        missing = list(self.sizes)
        for k, m in enumerate(missing):
            if m == 0 and self.heads[k] not in reason:
                reason[self.heads[k]] = k
                queue.append(self.heads[k])
        while queue:
            v = queue.popleft()
            for k in self.watch.get(v, ()):
                missing[k] -= 1
                if missing[k] == 0:
                    u = self.heads[k]
                    if u not in reason:
                        reason[u] = k
                        queue.append(u)
        return reason


@lru_cache(maxsize=4096)
def _prepare(sigma: frozenset) -> _Premises:
    return _Premises(sigma)


def _as_atom_set(sigma) -> frozenset:
    sigma = frozenset(sigma)
    for s in sigma:
        if not isinstance(s, GAtom):
            raise ContractError(f"premise is not a G-dependence atom: {s}")
    return sigma


# -- public operations ---------------------------------------------------------

def reach_set(sigma1: Iterable[GAtom], w: Iterable[str], v: Iterable[str]) -> frozenset:
    """Least S within v containing w and closed under: gdep(u, Z) in sigma1
    with Z inside S puts u in S.  gdep(u, w) is derivable iff u is in S."""
    sigma1 = _as_atom_set(sigma1)
    w, v = frozenset(w), frozenset(v)
    for a in sigma1:
        if len(a.lhs) != 1:
            raise ContractError(f"reach_set needs single-antecedent atoms, got {a}")
    if not w <= v:
        raise ContractError(f"seed variables {sorted(w - v)} are outside the universe")
    extra = variables_of(sigma1) - v
    if extra:
        raise ContractError(f"premise variables {sorted(extra)} are outside the universe")
    return frozenset(_prepare(sigma1).closure(w))


class _Builder:
    """Turns fixpoint traces into derivation trees, sharing subtrees."""

    def __init__(self, prem: _Premises):
        self.prem = prem
        self.premise_nodes: dict[GAtom, Derivation] = {}

    def premise(self, k: int) -> Derivation:
        atom = self.prem.atoms[k]
        node = self.premise_nodes.get(atom)
        if node is None:
            src = self.prem.source[atom]
            node = Derivation(src, PREMISE)
            if src != atom:
                node = Derivation(atom, R0, (node,))
            self.premise_nodes[atom] = node
        return node

    def component(self, w: frozenset, reason: dict, goal_var: str) -> Derivation:
        memo: dict[str, Derivation] = {}

        def build(u: str) -> Derivation:
            if u in memo:
                return memo[u]
            k = reason[u]
            target = GAtom(frozenset((u,)), w)
            if k is None:
                node = Derivation(GAtom(frozenset((u,)), frozenset((u,))), A1)
                if w != node.conclusion.rhs:
                    node = Derivation(target, R1, (node,))
            else:
                base = self.premise(k)
                z = self.prem.atoms[k].rhs
                if z <= w:
                    node = base if w == z else Derivation(target, R1, (base,))
                else:
                    side = tuple(build(t) for t in sorted(z))
                    node = Derivation(target, R2, side + (base,))
            memo[u] = node
            return node

        return build(goal_var)


def entails(sigma: Iterable[GAtom], goal: GAtom) -> EntailmentResult:
    """Decide whether goal is derivable from sigma, with a witness either way."""
    sigma = _as_atom_set(sigma)
    if not isinstance(goal, GAtom):
        raise ContractError(f"goal is not a G-dependence atom: {goal}")
    if not goal.lhs:
        return EntailmentResult(True, Derivation(goal, A0))
    prem = _prepare(sigma)
    builder = _Builder(prem)
    parts = []
    for comp in sorted(normalize(goal), key=lambda a: a.antecedent):
        reason = prem.closure(comp.rhs)
        if comp.antecedent not in reason:
            universe = variables_of(sigma) | goal.variables
            differing = universe - frozenset(reason)
            cm = CounterModel(binary_pair_team(universe, differing), differing)
            return EntailmentResult(False, counter_model=cm)
        parts.append(builder.component(comp.rhs, reason, comp.antecedent))
    if len(parts) == 1 and parts[0].conclusion == goal:
        return EntailmentResult(True, parts[0])
    return EntailmentResult(True, Derivation(goal, R0P, tuple(parts)))


def derivable(sigma: Iterable[GAtom], goal: GAtom) -> bool:
    return entails(sigma, goal).verdict


def deductive_closure(sigma: Iterable[GAtom], v: Iterable[str],
                      bound: int = CLOSURE_LIMIT) -> frozenset:
    """Every derivable single-antecedent atom over the variables v."""
    sigma = _as_atom_set(sigma)
    v = frozenset(v) | variables_of(sigma)
    if len(v) > bound:
        raise SizeError(f"closure over {len(v)} variables exceeds bound {bound}")
    prem = _prepare(sigma)
    out = set()
    names = sorted(v)
    for size in range(len(names) + 1):
        for w in combinations(names, size):
            ws = frozenset(w)
            out.update(GAtom(frozenset((u,)), ws) for u in prem.closure(ws))
    return frozenset(out)


# -- independent semantic oracle ------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _model_mask(columns: tuple, atom: GAtom) -> int:
    """Bit d is set iff the two-row binary team differing on subset d satisfies atom."""
    mask = 0
    for d in range(1 << len(columns)):
        differing = [c for i, c in enumerate(columns) if d >> i & 1]
        if check_gdep(binary_pair_team(columns, differing), atom.lhs, atom.rhs):
            mask |= 1 << d
    return mask


def semantic_oracle(sigma: Iterable[GAtom], goal: GAtom,
                    limit: int = ORACLE_LIMIT) -> bool:
    """Sigma |= goal, by enumerating every two-row binary team over the
    variables involved.  Uses only check_gdep, never the calculus."""
    sigma = _as_atom_set(sigma)
    columns = tuple(sorted(variables_of(sigma) | goal.variables))
    if len(columns) > limit:
        raise SizeError(f"oracle over {len(columns)} variables exceeds limit {limit}")
    models = (1 << (1 << len(columns))) - 1
    for s in sigma:
        models &= _model_mask(columns, s)
    return models & ~_model_mask(columns, goal) == 0


# -- derivation checking ---------------------------------------------------------

def _node_errors(sigma: frozenset, d: Derivation) -> Optional[str]:
    c, ps = d.conclusion, [p.conclusion for p in d.premises]
    if d.rule == PREMISE:
        if ps:
            return "premise leaf has children"
        return None if c in sigma else f"{c} is not a declared premise"
    if d.rule == A0:
        if ps:
            return "axiom has children"
        return None if not c.lhs else f"A0 needs an empty lhs, got {c}"
    if d.rule == A1:
        if ps:
            return "axiom has children"
        return None if c.lhs == c.rhs else f"A1 needs equal sides, got {c}"
    if d.rule == R0:
        if len(ps) != 1:
            return f"R0 takes one premise, got {len(ps)}"
        (p,) = ps
        if len(c.lhs) != 1 or not c.lhs <= p.lhs:
            return f"R0 conclusion lhs must be one variable of {sorted(p.lhs)}"
        if c.rhs != (p.lhs - c.lhs) | p.rhs:
            return f"R0 conclusion {c} does not match premise {p}"
        return None
    if d.rule == R0P:
        if not c.lhs:
            return "R0' needs a nonempty lhs"
        want = {GAtom(frozenset((x,)), (c.lhs - {x}) | c.rhs) for x in c.lhs}
        if len(ps) != len(c.lhs) or set(ps) != want:
            return f"R0' premises do not split {c}"
        return None
    if d.rule == R1:
        if len(ps) != 1:
            return f"R1 takes one premise, got {len(ps)}"
        (p,) = ps
        if p.lhs != c.lhs or not p.rhs <= c.rhs:
            return f"R1 cannot weaken {p} to {c}"
        return None
    if d.rule == R2:
        if not ps:
            return "R2 needs at least one premise"
        main, side = ps[-1], ps[:-1]
        if len(main.lhs) != 1 or main.lhs != c.lhs:
            return f"R2 main premise {main} does not match conclusion {c}"
        want = {GAtom(frozenset((z,)), c.rhs) for z in main.rhs}
        if len(side) != len(main.rhs) or set(side) != want:
            return f"R2 side premises do not cover {sorted(main.rhs)} -> {sorted(c.rhs)}"
        return None
    return f"unknown rule {d.rule!r}"


def derivation_errors(sigma: Iterable[GAtom], d: Derivation) -> list[str]:
    """Diagnostics for every bad node, each prefixed with its child-index path."""
    sigma = frozenset(sigma)
    errors = []
    checked: set[int] = set()
    stack = [(d, "root")]
    while stack:
        node, path = stack.pop()
        if id(node) in checked:
            continue
        checked.add(id(node))
        err = _node_errors(sigma, node)
        if err:
            errors.append(f"{path}: {err}")
        stack.extend((p, f"{path}/{i}") for i, p in enumerate(node.premises))
    return errors


def check_derivation(sigma: Iterable[GAtom], d: Derivation) -> bool:
    return not derivation_errors(sigma, d)


def parse_derivation(text: str) -> Derivation:
    """Inverse of Derivation.format: 'rule: atom' lines, two-space indentation."""
    from .atoms import parse_gatom

    entries = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.rstrip("\r\n")
        if body.strip():
            stripped = body.lstrip(" ")
            depth, rem = divmod(len(body) - len(stripped), 2)
            if rem:
                raise ParseError("indentation must be a multiple of two spaces", offset)
            rule, sep, atom = stripped.partition(":")
            if not sep or rule.strip() not in RULES:
                raise ParseError(f"expected '<rule>: <atom>', got {stripped!r}", offset)
            try:
                conclusion = parse_gatom(atom)
            except ParseError as e:
                raise ParseError(f"bad atom in derivation: {e}", offset) from None
            entries.append((depth, rule.strip(), conclusion, offset))
        offset += len(line)
    if not entries:
        raise ParseError("empty derivation", 0)

    pos = 0

    def node(depth: int) -> Derivation:
        nonlocal pos
        d, rule, concl, where = entries[pos]
        if d != depth:
            raise ParseError(f"unexpected indentation depth {d}", where)
        pos += 1
        kids = []
        while pos < len(entries) and entries[pos][0] > depth:
            kids.append(node(depth + 1))
        return Derivation(concl, rule, tuple(kids))

    root = node(0)
    if pos != len(entries):
        raise ParseError("more than one root node", entries[pos][3])
    return root
