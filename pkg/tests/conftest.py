import functools

import pytest

from stablepieces.pieces import PieceContext
from stablepieces.rootsys import build_root_system, parse_automorphism_spec
from stablepieces.weyl import WeylGroup


@functools.lru_cache(maxsize=None)
def get_root_system(type_spec):
    return build_root_system(type_spec)


@functools.lru_cache(maxsize=None)
def get_group(type_spec):
    return WeylGroup(get_root_system(type_spec))


@functools.lru_cache(maxsize=None)
def get_context(type_spec, auto_spec="id"):
    group = get_group(type_spec)
    sigma = parse_automorphism_spec(group.rs, auto_spec)
    return PieceContext(group, sigma)


@pytest.fixture
def a2_group():
    return get_group("A2")
