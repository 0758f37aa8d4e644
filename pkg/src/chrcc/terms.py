"""Concrete first-order terms, substitutions, unification and one-way matching."""

from __future__ import annotations

import itertools


class Term:
    __slots__ = ()


class Var(Term):
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __eq__(self, other):
        return type(other) is Var and other.name == self.name

    def __hash__(self):
        return hash(("var", self.name))

    def __repr__(self):
        return f"Var({self.name!r})"


class Int(Term):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __eq__(self, other):
        return type(other) is Int and other.value == self.value

    def __hash__(self):
        return hash(("int", self.value))

    def __repr__(self):
        return f"Int({self.value})"


class Fun(Term):
    __slots__ = ("name", "args")

    def __init__(self, name, args=()):
        self.name = name
        self.args = tuple(args)

    def __eq__(self, other):
        return type(other) is Fun and other.name == self.name and other.args == self.args

    def __hash__(self):
        return hash(("fun", self.name, self.args))

    def __repr__(self):
        return f"Fun({self.name!r}, {self.args!r})"


NIL = Fun("[]")
CONS = "."


class Atom:
    __slots__ = ("pred", "args")

    def __init__(self, pred, args=()):
        self.pred = pred
        self.args = tuple(args)

    @property
    def indicator(self):
        return (self.pred, len(self.args))

    def __eq__(self, other):
        return type(other) is Atom and other.pred == self.pred and other.args == self.args

    def __hash__(self):
        return hash(("atom", self.pred, self.args))

    def __repr__(self):
        return f"Atom({self.pred!r}, {self.args!r})"


class Clause:
    __slots__ = ("head", "body")

    def __init__(self, head, body=()):
        self.head = head
        self.body = tuple(body)

    def __eq__(self, other):
        return type(other) is Clause and other.head == self.head and other.body == self.body

    def __repr__(self):
        return f"Clause({self.head!r}, {self.body!r})"


class Program:
    """Ordered clause database keyed by predicate indicator."""

    def __init__(self, clauses=()):
        self.clauses = list(clauses)
        self.index = {}
        for i, c in enumerate(self.clauses):
            self.index.setdefault(c.head.indicator, []).append((i, c))

    def clauses_for(self, indicator):
        return self.index.get(indicator, [])

    def predicates(self):
        seen = []
        for c in self.clauses:
            if c.head.indicator not in seen:
                seen.append(c.head.indicator)
        return seen

    def __eq__(self, other):
        return isinstance(other, Program) and other.clauses == self.clauses


def mklist(items, tail=NIL):
    term = tail
    for x in reversed(list(items)):
        term = Fun(CONS, (x, term))
    return term


def list_parts(term):
    """Split a '.'-spine into (elements, tail); tail is NIL for proper lists."""
    elems = []
    while isinstance(term, Fun) and term.name == CONS and len(term.args) == 2:
        elems.append(term.args[0])
        term = term.args[1]
    return elems, term


def is_proper_list(term):
    return list_parts(term)[1] == NIL


def term_vars(x, acc=None):
    """Variables of a term/atom/clause/sequence, in first-occurrence order."""
    if acc is None:
        acc = []
    if isinstance(x, Var):
        if x not in acc:
            acc.append(x)
    elif isinstance(x, Fun):
        for a in x.args:
            term_vars(a, acc)
    elif isinstance(x, Atom):
        for a in x.args:
            term_vars(a, acc)
    elif isinstance(x, Clause):
        term_vars(x.head, acc)
        for a in x.body:
            term_vars(a, acc)
    elif isinstance(x, (list, tuple)):
        for a in x:
            term_vars(a, acc)
    return acc


class Substitution:
    """Idempotent variable binding map; no binding maps a variable to itself."""

    def __init__(self, bindings=None):
        self.bindings = {}
        if bindings:
            for v, t in bindings.items():
                name = v.name if isinstance(v, Var) else v
                if not (isinstance(t, Var) and t.name == name):
                    self.bindings[name] = t
        self._normalize()

    def _normalize(self):
        for _ in range(len(self.bindings) + 1):
            changed = False
            for name, t in list(self.bindings.items()):
                t2 = self.apply(t)
                if t2 != t:
                    self.bindings[name] = t2
                    changed = True
            if not changed:
                return

    def apply(self, x):
        if isinstance(x, Var):
            t = self.bindings.get(x.name)
            return x if t is None else self.apply(t)
        if isinstance(x, Fun):
            return Fun(x.name, tuple(self.apply(a) for a in x.args)) if x.args else x
        if isinstance(x, Atom):
            return Atom(x.pred, tuple(self.apply(a) for a in x.args))
        if isinstance(x, Clause):
            return Clause(self.apply(x.head), tuple(self.apply(b) for b in x.body))
        if isinstance(x, (list, tuple)):
            return type(x)(self.apply(a) for a in x)
        return x

    def restrict(self, variables):
        names = {v.name if isinstance(v, Var) else v for v in variables}
        return Substitution({n: t for n, t in self.bindings.items() if n in names})

    def domain(self):
        return set(self.bindings)

    def __eq__(self, other):
        return isinstance(other, Substitution) and other.bindings == self.bindings

    def __repr__(self):
        inner = ", ".join(f"{n}->{t!r}" for n, t in sorted(self.bindings.items()))
        return "{" + inner + "}"


def occurs(name, term, bindings):
    stack = [term]
    while stack:
        t = stack.pop()
        while isinstance(t, Var) and t.name in bindings:
            t = bindings[t.name]
        if isinstance(t, Var):
            if t.name == name:
                return True
        elif isinstance(t, Fun):
            stack.extend(t.args)
    return False


def unify(t1, t2):
    """Most general unifier of two terms/atoms, with occurs check; None on failure."""
    bindings = {}

    def walk(t):
        while isinstance(t, Var) and t.name in bindings:
            t = bindings[t.name]
        return t

    stack = [(t1, t2)]
    while stack:
        a, b = stack.pop()
        if isinstance(a, Atom) and isinstance(b, Atom):
            if a.pred != b.pred or len(a.args) != len(b.args):
                return None
            stack.extend(zip(a.args, b.args))
            continue
        a, b = walk(a), walk(b)
        if a == b:
            continue
        if isinstance(a, Var):
            if occurs(a.name, b, bindings):
                return None
            bindings[a.name] = b
        elif isinstance(b, Var):
            if occurs(b.name, a, bindings):
                return None
            bindings[b.name] = a
        elif isinstance(a, Int) and isinstance(b, Int):
            return None  # unequal ints (equal handled above)
        elif isinstance(a, Fun) and isinstance(b, Fun):
            if a.name != b.name or len(a.args) != len(b.args):
                return None
            stack.extend(zip(a.args, b.args))
        else:
            return None
    return Substitution(bindings)


def match(pattern, instance):
    """One-way matching: binds pattern variables only; never instantiates the instance.

    Succeeds iff the instance is an instance of the pattern; an instance
    variable only matches a pattern variable (which then binds to it).
    """
    bindings = {}
    stack = [(pattern, instance)]
    while stack:
        p, i = stack.pop()
        if isinstance(p, Atom) and isinstance(i, Atom):
            if p.pred != i.pred or len(p.args) != len(i.args):
                return None
            stack.extend(zip(p.args, i.args))
            continue
        if isinstance(p, Var):
            if p.name in bindings:
                if bindings[p.name] != i:
                    return None
            else:
                bindings[p.name] = i
            continue
        if isinstance(i, Var):
            return None  # would instantiate the instance
        if isinstance(p, Int) and isinstance(i, Int):
            if p.value != i.value:
                return None
        elif isinstance(p, Fun) and isinstance(i, Fun):
            if p.name != i.name or len(p.args) != len(i.args):
                return None
            stack.extend(zip(p.args, i.args))
        else:
            return None
    return Substitution(bindings)


_fresh_counter = itertools.count(1)


def fresh_var(hint="V"):
    return Var(f"_{hint}{next(_fresh_counter)}")


def rename_apart(x, mapping=None):
    """Variant of a term/atom/clause with globally fresh variables; sharing preserved."""
    if mapping is None:
        mapping = {}

    def go(t):
        if isinstance(t, Var):
            if t.name not in mapping:
                base = t.name.lstrip("_").rstrip("0123456789") or "V"
                mapping[t.name] = fresh_var(base)
            return mapping[t.name]
        if isinstance(t, Fun):
            return Fun(t.name, tuple(go(a) for a in t.args)) if t.args else t
        if isinstance(t, Atom):
            return Atom(t.pred, tuple(go(a) for a in t.args))
        if isinstance(t, Clause):
            return Clause(go(t.head), tuple(go(b) for b in t.body))
        if isinstance(t, (list, tuple)):
            return type(t)(go(a) for a in t)
        return t

    return go(x)
