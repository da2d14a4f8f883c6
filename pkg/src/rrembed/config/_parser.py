from __future__ import print_function, division, absolute_import

import json
import re

from ..errors import ConfigParseError
from ..util import _monadic as m
from . import ast as a


def tokenize(text):
    """Split config text into tokens, dropping whitespace and comments."""
    parts, rest, d = splitter(text)

    if rest != '':
        line = text[:len(text) - len(rest)].count('\n') + 1
        raise ConfigParseError('cannot tokenize line %d near %r' % (line, rest[:20]))

    return parts


def parse(text, what=None):
    """Parse config text into a :class:`rrembed.config.ast.Document`.

    :param str what:
        ``'value'`` to parse a single value such as ``"10.746 eV"``.
    """
    if what is not None:
        used_parser = constructors[what] if what in constructors else what

    else:
        used_parser = document
        text = text + '\n'

    tokens = tokenize(text)
    node, rest, debug = used_parser(tokens)

    if rest:
        consumed = tokens[:len(tokens) - len(rest)]
        raise ConfigParseError('cannot parse line %d near %s' % (
            consumed.count('\n') + 1, ' '.join(repr(t) for t in rest[:5]),
        ))

    if len(node) != 1:
        raise RuntimeError('internal parser error')

    return node[0]


def load_text(text):
    """Parse config text into nested dicts of python values."""
    doc = parse(text)
    result = {}
    current = result

    for statement in doc.statements:
        if isinstance(statement, a.Section):
            if statement.name in result:
                raise ConfigParseError('duplicate section [%s]' % statement.name, key=statement.name)

            current = result[statement.name] = {}
            continue

        *path, key = statement.key.split('.')
        target = current
        for part in path:
            target = target.setdefault(part, {})

            if not isinstance(target, dict):
                raise ConfigParseError('%s is not a section' % part, key=statement.key)

        if key in target:
            raise ConfigParseError('duplicate key %s' % statement.key, key=statement.key)

        target[key] = evaluate(statement.value)

    return result


def load_json(text):
    try:
        obj = json.loads(text)

    except ValueError as exc:
        raise ConfigParseError('invalid json: %s' % exc)

    if not isinstance(obj, dict):
        raise ConfigParseError('json config must be an object, got %s' % type(obj).__name__)

    # provenance sidecars embed the resolved config
    if isinstance(obj.get('config'), dict) and 'experiment' in obj['config']:
        obj = obj['config']

    return obj


def parse_value(text):
    """Evaluate a single value given as text."""
    return evaluate(parse(text, what='value'))


def verbatim_token(*p):
    return m.one(m.verbatim(*p))


def regex_token(p):
    return m.one(m.regex(p))


def svtok(*p):
    return m.ignore(m.one(m.verbatim(*p)))


integer_format = r'[+-]?\d+'
number_format = r'[+-]?(\d+\.\d*([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+)'
name_format = r'[a-zA-Z_][\w.]*'

operators = {'=', ',', '[', ']', '\n'}

splitter = m.repeat(m.any(
    m.ignore(m.regex(r'#[^\n]*')),
    m.ignore(m.regex(r'[ \t\r]+')),
    m.string('"'),
    m.regex(number_format),
    m.regex(name_format),
    m.verbatim(*operators),
))

newline = svtok('\n')
name = regex_token(name_format)
number = regex_token(number_format)

quantity = m.construct(a.Quantity, m.keyword(value=number), m.optional(m.keyword(unit=name)))
bool_value = m.construct(a.Bool, m.keyword(value=m.map(lambda v: v == 'true', verbatim_token('true', 'false'))))
string_value = m.construct(a.String, m.keyword(value=m.map(a.String.unquote, m.one(m.string('"')))))
name_value = m.construct(a.Name, m.keyword(name=name))

atom = m.any(quantity, bool_value, string_value, name_value)

list_value = m.construct(
    a.List,
    svtok('['),
    m.keyword(items=m.any(m.list_of(svtok(','), atom), m.literal([]))),
    svtok(']'),
)

value = m.any(list_value, atom)

assignment = m.construct(a.Assignment, m.keyword(key=name), svtok('='), m.keyword(value=value), newline)
section = m.construct(a.Section, svtok('['), m.keyword(name=name), svtok(']'), newline)
statement = m.any(section, assignment, newline)

document = m.construct(a.Document, m.keyword(statements=m.transform(lambda s: [s], m.repeat(statement))))

constructors = {
    'value': value,
    'document': document,
}


evaluate = m.RuleSet(name='evaluate')


@evaluate.rule(m.instanceof(a.Quantity))
def evaluate_quantity(evaluate, node):
    number = int(node.value) if re.match(integer_format + '$', node.value) else float(node.value)

    if node.unit is None:
        return number

    return a.Quantity(float(number), node.unit)


@evaluate.rule(m.instanceof(a.Bool))
def evaluate_bool(evaluate, node):
    return node.value


@evaluate.rule(m.instanceof(a.Name))
def evaluate_name(evaluate, node):
    return node.name


@evaluate.rule(m.instanceof(a.String))
def evaluate_string(evaluate, node):
    return node.value


@evaluate.rule(m.instanceof(a.List))
def evaluate_list(evaluate, node):
    return [evaluate(item) for item in node.items]
