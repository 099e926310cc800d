"""Python access to the p-adic principal series toolkit.

Structured results come back as dictionaries in the same JSON layout the
command-line driver writes.
"""

import json

from ._core import InputError, Padic, kostant_count, power_char
from . import _core

__all__ = [
    "InputError",
    "Padic",
    "act",
    "base_change",
    "bruhat_components",
    "check_character",
    "is_irreducible",
    "kostant_count",
    "power_char",
    "weight_ranks",
    "xz_decompose",
]


def _params(c):
    return [str(x) for x in c]


def check_character(c, p=7, precision=12, e=1):
    return json.loads(_core.check_character_json(_params(c), p, precision, e))


def xz_decompose(i, j, n, truncation=6, p=7, precision=12):
    return json.loads(_core.xz_decompose_json(i, j, n, truncation, p, precision))


def act(vector, matrix):
    return json.loads(_core.act_json(json.dumps(vector), json.dumps(matrix)))


def is_irreducible(c, p=7, precision=12):
    return json.loads(_core.is_irreducible_json(_params(c), p, precision))


def weight_ranks(c, truncation=6, p=7, precision=12):
    return json.loads(_core.weight_rank_json(_params(c), truncation, p, precision))


def bruhat_components(c, p=7, precision=12):
    return json.loads(_core.bruhat_components_json(_params(c), p, precision))


def base_change(series, N=2):
    return json.loads(_core.base_change_json(json.dumps(series), N))
