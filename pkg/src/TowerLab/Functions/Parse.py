import json

from TowerLab.Objects.Chains.FunctionSpec import FunctionSpec
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.Partitions.Rows import Rows
from TowerLab.Objects.Partitions.TablePartition import TablePartition
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.errors import BadSpec


def _read_json(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as error:
        raise BadSpec(f'Cannot read {path}: {error}') from None


def partition_from_json(data):
    kind = data.get('kind')
    if kind == 'vertical':
        return Vertical()
    if kind == 'rows':
        return Rows()
    if kind == 'E':
        return EPartition(data.get('d'))
    if kind == 'table':
        if 'name' in data:
            return TablePartition.named(data['name'])
        return TablePartition.from_cells(data.get('cells', []))
    raise BadSpec(f'Unknown partition kind {kind!r}.')


def parse_partition(text):
    """Inline specs: vertical, rows, E, E:cantor, E:dyadic and the named table rules; or @file.json."""
    text = text.strip()
    if text.startswith('@'):
        return partition_from_json(_read_json(text[1:]))
    if text in ('vertical', 'rows'):
        return partition_from_json({'kind': text})
    if text == 'E' or text.startswith('E:'):
        return EPartition(text[2:] or None)
    if text in TablePartition.RULES:
        return TablePartition.named(text)
    raise BadSpec(f'Unknown partition {text!r}.')


def parse_kvec(text):
    try:
        kvec = tuple(int(k) for k in text.split(','))
    except ValueError:
        raise BadSpec(f'Widths must be comma separated naturals, got {text!r}.') from None
    if any(k < 0 for k in kvec):
        raise BadSpec(f'Widths must be natural numbers, got {text!r}.')
    return kvec


def parse_functions(texts):
    """Function specs; an empty string stands for no functions at all."""
    return tuple(FunctionSpec.parse(t) for t in texts if t)
