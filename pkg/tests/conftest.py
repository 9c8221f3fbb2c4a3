"""Shared fixtures: the worked examples used throughout the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from nasheq.strategic import make_symmetric, new_game
from nasheq.tree import CHANCE, GameTree


@pytest.fixture
def simultaneous_game():
    return new_game([[5, 3], [6, 4]], [[2, 1], [3, 4]], ["T", "B"], ["l", "r"])


@pytest.fixture
def commitment_game():
    return new_game(
        [[5, 5, 3, 3], [6, 4, 6, 4]],
        [[2, 2, 1, 1], [3, 4, 3, 4]],
        ["T", "B"],
        ["la", "lb", "ra", "rb"],
    )


@pytest.fixture
def noisy_game():
    return new_game(
        [[5, "249/50", "151/50", 3], [6, "201/50", "299/50", 4]],
        [[2, "199/100", "101/100", 1], [3, "399/100", "301/100", 4]],
        ["T", "B"],
        ["la", "lb", "ra", "rb"],
    )


@pytest.fixture
def anticoordination_game():
    return make_symmetric([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])


@pytest.fixture
def threat_game():
    return new_game([[1, 1], [0, 2]], [[3, 3], [0, 2]], ["T", "B"], ["l", "r"])


def build_commitment_tree() -> GameTree:
    tree = GameTree.starting_tree()
    root = tree.nodes[tree.root]
    for child in list(root.children):
        tree.add_children(child, 2)
    tree.assign_owner(tree.root, 1)
    for child in root.children:
        tree.assign_owner(child, 2)
    tree.set_move_names(1, ["T", "B"])
    tree.set_move_names(2, ["l", "r", "a", "b"])
    tree.set_payoffs(1, [5, 3, 6, 4])
    tree.set_payoffs(2, [2, 1, 3, 4])
    return tree


def build_simultaneous_tree() -> GameTree:
    tree = build_commitment_tree()
    first, second = (s.sid for s in tree.player_isets(2))
    tree.merge_infosets(first, second)
    tree.set_move_names(2, ["l", "r"])
    return tree


def build_noisy_tree() -> GameTree:
    tree = GameTree.starting_tree()
    root = tree.nodes[tree.root]
    top = list(root.children)
    for child in top:
        tree.add_children(child, 2)
    tree.assign_owner(tree.root, 1)
    for child in top:
        tree.assign_owner(child, CHANCE)
    second = []
    for child in top:
        for grand in tree.nodes[child].children:
            tree.add_children(grand, 2)
            tree.assign_owner(grand, 2)
            second.append(grand)
    saw_t_after_t, saw_b_after_t, saw_t_after_b, saw_b_after_b = second
    tree.merge_infosets(tree.nodes[saw_t_after_t].iset, tree.nodes[saw_t_after_b].iset)
    tree.merge_infosets(tree.nodes[saw_b_after_t].iset, tree.nodes[saw_b_after_b].iset)
    tree.set_move_names(1, ["T", "B"])
    tree.set_move_names(2, ["l", "r", "a", "b"])
    tree.set_chance_prob(top[0], 0, Fraction(99, 100))
    tree.set_chance_prob(top[1], 0, Fraction(1, 100))
    tree.set_payoffs(1, [5, 3, 5, 3, 6, 4, 6, 4])
    tree.set_payoffs(2, [2, 1, 2, 1, 3, 4, 3, 4])
    return tree


def build_threat_tree() -> GameTree:
    tree = GameTree.starting_tree()
    root = tree.nodes[tree.root]
    tree.assign_owner(tree.root, 1)
    right = root.children[1]
    tree.add_children(right, 2)
    tree.assign_owner(right, 2)
    tree.set_move_names(1, ["T", "B"])
    tree.set_move_names(2, ["l", "r"])
    tree.set_payoffs(1, [1, 0, 2])
    tree.set_payoffs(2, [3, 0, 2])
    return tree


def build_five_by_twelve_tree() -> GameTree:
    """Four root moves for player 1, a later two-move set of his, and four
    singleton two-move sets for player 2 (the 5x12 reduced-form game)."""
    tree = GameTree()
    tree.add_children(tree.root, 4)
    root = tree.nodes[tree.root]
    v_a, v_b, v_c, _v_d = root.children
    tree.assign_owner(tree.root, 1)
    tree.add_children(v_a, 2)
    tree.assign_owner(v_a, 2)
    w_a, v_ab = tree.nodes[v_a].children
    tree.add_children(w_a, 2)
    tree.assign_owner(w_a, 1)
    tree.add_children(v_ab, 2)
    tree.assign_owner(v_ab, 2)
    w_g, w_h = tree.nodes[v_ab].children
    for node in (w_g, w_h):
        tree.add_children(node, 2)
        tree.assign_owner(node, 1)
    tree.merge_infosets(tree.nodes[w_a].iset, tree.nodes[w_g].iset)
    tree.merge_infosets(tree.nodes[w_a].iset, tree.nodes[w_h].iset)
    for node in (v_b, v_c):
        tree.add_children(node, 2)
        tree.assign_owner(node, 2)
    tree.default_payoffs()
    return tree


@pytest.fixture
def commitment_tree():
    return build_commitment_tree()


@pytest.fixture
def simultaneous_tree():
    return build_simultaneous_tree()


@pytest.fixture
def noisy_tree():
    return build_noisy_tree()


@pytest.fixture
def threat_tree():
    return build_threat_tree()


@pytest.fixture
def five_by_twelve_tree():
    return build_five_by_twelve_tree()


def random_game(rng: random.Random, max_m=5, max_n=5, lo=-9, hi=9, min_m=2, min_n=2):
    m = rng.randint(min_m, max_m)
    n = rng.randint(min_n, max_n)
    a = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(m)]
    b = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(m)]
    return new_game(a, b)


def random_rational_game(rng: random.Random, max_m=5, max_n=5):
    m = rng.randint(2, max_m)
    n = rng.randint(2, max_n)
    a = [
        [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(m)
    ]
    b = [
        [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(m)
    ]
    return new_game(a, b)
