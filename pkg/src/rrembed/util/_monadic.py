"""Parser combinators and rule based dispatch.

A matcher is a callable ``matcher(seq) -> (matched, rest, trace)``. On success
``matched`` lists the produced values and ``rest`` is the unconsumed input, on
failure ``matched`` is ``None`` and ``rest`` the unchanged input. ``trace`` is
a :class:`Trace` of what was tried, for error messages.

The config tokenizer works on text, the config grammar on token lists and
:class:`RuleSet` on single values wrapped into a one-element list.
"""
from __future__ import print_function, division, absolute_import

import builtins
import re


class Trace(object):
    __slots__ = ('ok', 'where', 'message', 'children')

    def __init__(self, ok, where, message='', children=()):
        self.ok = ok
        self.where = where
        self.message = message
        self.children = list(children)

    def lines(self, indent=0):
        yield '{}{}: {} in {}'.format(' ' * indent, 'ok' if self.ok else 'failed', self.message, self.where)

        for child in self.children:
            for line in child.lines(indent + 1):
                yield line

    def __repr__(self):
        return 'Trace({!r}, {!r})'.format(self.ok, self.where)


class Matcher(object):
    def __call__(self, seq):
        raise NotImplementedError()

    def succeed(self, matched, rest, message='', children=()):
        return matched, rest, Trace(True, repr(self), message, children)

    def fail(self, seq, message='', children=()):
        return None, seq, Trace(False, repr(self), message, children)

    def __repr__(self):
        return '{}()'.format(type(self).__name__)


class Predicate(Matcher):
    """Consume the first item if ``func(item)`` holds."""
    def __init__(self, func, name):
        self.func = func
        self.name = name

    def __call__(self, seq):
        if not seq:
            return self.fail(seq, 'no input')

        if not self.func(seq[0]):
            return self.fail(seq, 'predicate failed')

        return self.succeed([seq[0]], seq[1:])

    def __repr__(self):
        return self.name


def eq(val):
    return Predicate(lambda obj: obj == val, 'eq<{!r}>'.format(val))


def instanceof(cls):
    return Predicate(lambda obj: isinstance(obj, cls), 'instanceof<{}>'.format(getattr(cls, '__name__', cls)))


def none():
    return Predicate(lambda obj: obj is None, 'none')


# text matchers
class verbatim(Matcher):
    """Any of the given literals, longer ones take precedence."""
    def __init__(self, *literals):
        self.literals = sorted(set(literals), key=len, reverse=True)

    def __call__(self, text):
        for literal in self.literals:
            if text[:len(literal)] == literal:
                return self.succeed([literal], text[len(literal):], '%r matched' % literal)

        return self.fail(text, '%r does not start with any literal' % (text[:len(self.literals[0])],))

    def __repr__(self):
        return 'verbatim({})'.format(', '.join(builtins.map(repr, self.literals)))


class regex(Matcher):
    def __init__(self, pattern):
        self.pattern = re.compile(pattern, re.MULTILINE)

    def __call__(self, text):
        found = self.pattern.match(text)

        if found is None:
            return self.fail(text)

        token = found.group(0)
        return self.succeed([token], text[len(token):])

    def __repr__(self):
        return 'regex({!r})'.format(self.pattern.pattern)


class string(Matcher):
    """Quoted strings, a doubled quote stands for the quote itself."""
    def __init__(self, quote='"'):
        self.quote = quote

    def __call__(self, text):
        q = self.quote
        if not text or text[0] != q:
            return self.fail(text)

        end = 1
        while True:
            end = text.find(q, end)

            if end < 0:
                return self.fail(text, 'unterminated string')

            if text[end + 1:end + 2] != q:
                break

            end += 2

        return self.succeed([text[:end + 1]], text[end + 1:])


# combinators
class sequence(Matcher):
    def __init__(self, *matchers):
        self.matchers = matchers

    def __call__(self, seq):
        matched = []
        children = []
        rest = seq

        for matcher in self.matchers:
            part, rest, trace = matcher(rest)
            children.append(trace)

            if part is None:
                return self.fail(seq, children=children)

            matched.extend(part)

        return self.succeed(matched, rest, children=children)


class repeat(Matcher):
    """Zero or more matches, stops at the first failure or when no input is consumed."""
    def __init__(self, matcher):
        self.matcher = matcher

    def __call__(self, seq):
        matched = []
        children = []

        while True:
            part, rest, trace = self.matcher(seq)
            children.append(trace)

            if part is None:
                break

            matched.extend(part)
            if len(rest) == len(seq):
                break

            seq = rest

        return self.succeed(matched, seq, children=children)


class any(Matcher):
    """The first alternative that matches."""
    def __init__(self, *matchers):
        self.matchers = matchers

    def __call__(self, seq):
        children = []

        for matcher in self.matchers:
            part, rest, trace = matcher(seq)
            children.append(trace)

            if part is not None:
                return self.succeed(part, rest, children=children)

        return self.fail(seq, 'no alternative matched', children=children)


class optional(Matcher):
    def __init__(self, matcher):
        self.matcher = matcher

    def __call__(self, seq):
        part, rest, trace = self.matcher(seq)

        if part is None:
            return self.succeed([], seq, children=[trace])

        return self.succeed(part, rest, children=[trace])


class one(Matcher):
    """Apply ``matcher`` to the first item, which has to be consumed completely."""
    def __init__(self, matcher):
        self.matcher = matcher

    def __call__(self, seq):
        if not seq:
            return self.fail(seq, 'no items')

        part, rest, trace = self.matcher(seq[0])

        if part is None:
            return self.fail(seq, 'did not match', children=[trace])

        if rest:
            return self.fail(seq, 'not fully consumed', children=[trace])

        return self.succeed(part, seq[1:], children=[trace])


class transform(Matcher):
    """Replace the matched values by ``func(matched)``."""
    def __init__(self, func, matcher):
        self.func = func
        self.matcher = matcher

    def __call__(self, seq):
        part, rest, trace = self.matcher(seq)

        if part is None:
            return self.fail(seq, children=[trace])

        return self.succeed(self.func(part), rest, children=[trace])


class literal(Matcher):
    """Produce ``values`` without consuming input."""
    def __init__(self, *values):
        self.values = list(values)

    def __call__(self, seq):
        return self.succeed(list(self.values), seq)


def map(func, matcher):
    return transform(lambda matched: [func(item) for item in matched], matcher)


def ignore(matcher):
    return transform(lambda _: [], matcher)


def list_of(sep, item):
    """Separated items collected into a single list value."""
    return transform(lambda matched: [matched], sequence(item, repeat(sequence(sep, item))))


def keyword(**kw):
    (name, matcher), = kw.items()
    return map(lambda obj: {name: obj}, matcher)


class construct(Matcher):
    """Build ``cls(**kw)`` from the keyword dicts produced by the matchers."""
    def __init__(self, cls, *matchers):
        self.cls = cls
        self.matcher = matchers[0] if len(matchers) == 1 else sequence(*matchers)

    def __call__(self, seq):
        part, rest, trace = self.matcher(seq)

        if part is None:
            return self.fail(seq, children=[trace])

        kwargs = {}
        for item in part:
            duplicates = set(kwargs) & set(item)
            if duplicates:
                raise ValueError('duplicate keys: {}'.format(duplicates))

            kwargs.update(item)

        return self.succeed([self.cls(**kwargs)], rest, children=[trace])

    def __repr__(self):
        return 'construct({})'.format(self.cls.__name__)


# matching single values
class MatchResult(object):
    __slots__ = ('matched',)

    def __init__(self, matched=False):
        self.matched = bool(matched)

    def __bool__(self):
        return self.matched

    def __eq__(self, other):
        return type(self) is type(other) and self.matched == other.matched

    def __repr__(self):
        return 'MatchResult({})'.format(self.matched)


def match(val, matcher):
    """Match a single value, which has to be consumed completely."""
    matched, rest, trace = matcher([val])

    if matched is None:
        return MatchResult(False)

    if rest:
        raise ValueError('not fully consumed {}:\n{}'.format(rest, '\n'.join(trace.lines())))

    return MatchResult(True)


class RuleSet(object):
    """Dispatch on the first rule whose matcher accepts the value.

    Rules are tried in registration order and called as
    ``func(ruleset, obj, *args, **kwargs)``.
    """
    def __init__(self, rules=(), name=None):
        self.name = name
        self.rules = list(rules)

    def rule(self, matcher):
        def register(func):
            self.add(matcher, func)
            return func

        return register

    def add(self, matcher, func):
        self.rules.append((matcher, func))

    def lookup(self, obj):
        for matcher, func in self.rules:
            if match(obj, matcher):
                return func

        return None

    def supports(self, obj):
        return self.lookup(obj) is not None

    def __call__(self, obj, *args, **kwargs):
        func = self.lookup(obj)

        if func is None:
            raise ValueError('{}: no rule matches {!r}'.format(self.name or 'rules', obj))

        return func(self, obj, *args, **kwargs)

    def __repr__(self):
        return 'RuleSet(name={})'.format(self.name) if self.name is not None else 'RuleSet()'
