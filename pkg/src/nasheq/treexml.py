"""XML persistence for games.

Only the leaf encoding is fixed by convention:

    <outcome move="T">
       <payoff player="1">1</payoff>
       <payoff player="2">3</payoff>
    </outcome>

with the incoming move (or, under a chance node, the incoming probability)
as an attribute and one payoff element per player.  The remaining
vocabulary is this project's: a <game> root holding optional <settings>,
the <players> list, and either a <tree> of nested <node>/<outcome>
elements or a <strategicForm> payload.  Personal nodes carry player= and
iset= attributes; chance nodes have player="chance" and prob= attributes
on their children.  Indentation is three spaces per level.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from .errors import InputError
from .rational import parse_rational
from .strategic import BimatrixGame, new_game
from .tree import CHANCE, GameTree

_INDENT = "   "

_KNOWN_GAME_CHILDREN = {"settings", "players", "tree", "strategicForm"}


def to_xml(tree: GameTree) -> str:
    lines = ["<game>"]
    if tree.settings:
        lines.append(_INDENT + "<settings>")
        for key in sorted(tree.settings):
            lines.append(
                _INDENT * 2 + f'<setting name="{_escape(key)}">{_escape(tree.settings[key])}</setting>'
            )
        lines.append(_INDENT + "</settings>")
    lines.append(_INDENT + "<players>")
    for k, name in enumerate(tree.players, 1):
        lines.append(_INDENT * 2 + f'<player id="{k}">{_escape(name)}</player>')
    lines.append(_INDENT + "</players>")
    lines.append(_INDENT + "<tree>")
    canonical = _canonical_iset_ids(tree)
    _write_node(tree, tree.root, None, lines, 2, canonical)
    lines.append(_INDENT + "</tree>")
    lines.append("</game>")
    return "\n".join(lines) + "\n"


def _canonical_iset_ids(tree: GameTree) -> dict:
    """Document-stable information-set ids: breadth-first first-visit order."""
    ids = {}
    for node in tree.bfs_nodes():
        if node.iset is not None and node.iset not in ids:
            ids[node.iset] = len(ids)
    return ids


def _escape(text: str) -> str:
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _edge_attr(tree: GameTree, parent_id, child_id) -> str:
    if parent_id is None:
        return ""
    parent = tree.nodes[parent_id]
    idx = parent.children.index(child_id)
    if parent.owner == CHANCE:
        return f' prob="{parent.probs[idx]}"'
    move = tree.isets[parent.iset].moves[idx] if parent.iset is not None else ""
    return f' move="{_escape(move)}"'


def _write_node(tree: GameTree, nid, parent_id, lines, depth, canonical) -> None:
    node = tree.nodes[nid]
    pad = _INDENT * depth
    edge = _edge_attr(tree, parent_id, nid)
    if node.is_leaf:
        lines.append(f"{pad}<outcome{edge}>")
        for k, name in enumerate(tree.players):
            value = node.payoffs[k] if k < len(node.payoffs) else Fraction(0)
            lines.append(f"{pad}{_INDENT}<payoff player=\"{_escape(name)}\">{value}</payoff>")
        lines.append(f"{pad}</outcome>")
        return
    if node.owner == CHANCE:
        owner_attr = ' player="chance"'
    elif node.owner is None:
        owner_attr = ""
    else:
        owner_attr = f' player="{_escape(tree.players[node.owner - 1])}"'
    iset_attr = f' iset="{canonical[node.iset]}"' if node.iset is not None else ""
    lines.append(f"{pad}<node{edge}{owner_attr}{iset_attr}>")
    for child in node.children:
        _write_node(tree, child, nid, lines, depth + 1, canonical)
    lines.append(f"{pad}</node>")


def outcome_fragment(tree: GameTree, leaf_id: int) -> str:
    """The four-line <outcome> block of one leaf, without indentation context."""
    lines: list[str] = []
    _write_node(tree, leaf_id, tree.nodes[leaf_id].parent, lines, 0, _canonical_iset_ids(tree))
    return "\n".join(lines)


# -- parsing -----------------------------------------------------------------


def _parse_payoff_text(text) -> Fraction:
    if text is None or not text.strip():
        raise InputError("payoff element without a rational value")
    return parse_rational(text.strip())


def from_xml(text: str) -> GameTree:
    """Parse a <game> document with a <tree> payload."""
    game = _root_element(text)
    tree_el = game.find("tree")
    if tree_el is None:
        raise InputError("no <tree> element in game file")
    players = _parse_players(game)
    node_els = list(tree_el)
    if len(node_els) != 1:
        raise InputError("<tree> must hold exactly one root node")
    tree = GameTree(players)
    name_to_player = {name: k + 1 for k, name in enumerate(players)}
    iset_groups: dict = {}

    def build(element, nid, under_chance, parent_personal):
        node = tree.nodes[nid]
        _check_edge_attrs(element, under_chance, parent_personal)
        if element.tag == "outcome":
            payoffs = [Fraction(0)] * len(players)
            for child in element:
                if child.tag != "payoff":
                    raise InputError(f"unknown element <{child.tag}> in outcome")
                who = child.get("player")
                if who not in name_to_player:
                    raise InputError(f"payoff for unknown player {who!r}")
                payoffs[name_to_player[who] - 1] = _parse_payoff_text(child.text)
            node.payoffs = payoffs
            return
        if element.tag != "node":
            raise InputError(f"unknown element <{element.tag}> in tree")
        children = list(element)
        if not children:
            raise InputError("<node> without children; use <outcome> for leaves")
        owner = element.get("player")
        kids = []
        for child_el in children:
            child = tree._new_node(nid)
            node.children.append(child.nid)
            kids.append((child_el, child.nid))
        if owner == "chance":
            node.owner = CHANCE
            probs = []
            for child_el, _ in kids:
                prob = child_el.get("prob")
                if prob is None:
                    raise InputError("child of a chance node needs a prob attribute")
                probs.append(parse_rational(prob))
            node.probs = probs
        elif owner is not None:
            if owner not in name_to_player:
                raise InputError(f"unknown player {owner!r}")
            node.owner = name_to_player[owner]
            key = (node.owner, element.get("iset"))
            moves = [child_el.get("move", "") for child_el, _ in kids]
            if key[1] is None:
                tree._singleton_iset(nid, node.owner)
                tree.isets[node.iset].moves = moves
                tree.isets[node.iset].custom_names = True
            else:
                iset_groups.setdefault(key, []).append((nid, moves))
        for child_el, child_id in kids:
            build(child_el, child_id, node.owner == CHANCE, node.owner not in (None, CHANCE))

    root_el = node_els[0]
    build(root_el, tree.root, False, False)
    for (player, _), members in iset_groups.items():
        moves0 = members[0][1]
        if any(moves != moves0 for _, moves in members):
            raise InputError("information set members disagree on move names")
        if len({len(tree.nodes[nid].children) for nid, _ in members}) != 1:
            raise InputError("information set members differ in child count")
        group = None
        for nid, _ in members:
            if group is None:
                tree._singleton_iset(nid, player)
                group = tree.isets[tree.nodes[nid].iset]
                group.moves = list(moves0)
                group.custom_names = True
            else:
                group.members.append(nid)
                tree.nodes[nid].iset = group.sid
    tree.settings = _parse_settings(game)
    return tree


def _check_edge_attrs(element, under_chance, parent_personal):
    if under_chance and element.get("prob") is None:
        raise InputError("child of a chance node needs a prob attribute")
    if parent_personal and element.get("move") is None:
        raise InputError("child of a personal node needs a move attribute")


def _root_element(text: str):
    try:
        game = ET.fromstring(text)
    except ET.ParseError as exc:
        raise InputError(f"malformed XML: {exc}") from exc
    if game.tag != "game":
        raise InputError(f"expected <game> root, found <{game.tag}>")
    for child in game:
        if child.tag not in _KNOWN_GAME_CHILDREN:
            raise InputError(f"unknown element <{child.tag}> in game file")
    return game


def _parse_players(game) -> list[str]:
    players_el = game.find("players")
    if players_el is None:
        return ["1", "2"]
    players = [(p.text or "").strip() for p in players_el if p.tag == "player"]
    if not players:
        raise InputError("empty players list")
    return players


def _parse_settings(game) -> dict:
    settings_el = game.find("settings")
    out = {}
    if settings_el is not None:
        for s in settings_el:
            if s.tag != "setting" or s.get("name") is None:
                raise InputError("settings entries are <setting name=...>text</setting>")
            out[s.get("name")] = (s.text or "").strip()
    return out


# -- strategic-form payloads ---------------------------------------------------


def strategic_to_xml(game: BimatrixGame) -> str:
    lines = ["<game>"]
    lines.append(_INDENT + "<players>")
    lines.append(_INDENT * 2 + '<player id="1">1</player>')
    lines.append(_INDENT * 2 + '<player id="2">2</player>')
    lines.append(_INDENT + "</players>")
    lines.append(_INDENT + f'<strategicForm rows="{game.m}" cols="{game.n}">')
    lines.append(_INDENT * 2 + f"<rowNames>{_escape(' '.join(game.row_names))}</rowNames>")
    lines.append(_INDENT * 2 + f"<colNames>{_escape(' '.join(game.col_names))}</colNames>")
    for player, matrix in ((1, game.a), (2, game.b)):
        body = " ; ".join(" ".join(str(v) for v in row) for row in matrix)
        lines.append(_INDENT * 2 + f'<payoffs player="{player}">{body}</payoffs>')
    lines.append(_INDENT + "</strategicForm>")
    lines.append("</game>")
    return "\n".join(lines) + "\n"


def _parse_strategic(element) -> BimatrixGame:
    rows = int(element.get("rows", "0"))
    cols = int(element.get("cols", "0"))
    row_names = col_names = None
    payoffs: dict = {}
    for child in element:
        if child.tag == "rowNames":
            row_names = (child.text or "").split()
        elif child.tag == "colNames":
            col_names = (child.text or "").split()
        elif child.tag == "payoffs":
            player = child.get("player")
            matrix = [
                [parse_rational(tok) for tok in chunk.split()]
                for chunk in (child.text or "").split(";")
            ]
            payoffs[player] = matrix
        else:
            raise InputError(f"unknown element <{child.tag}> in strategicForm")
    if "1" not in payoffs or "2" not in payoffs:
        raise InputError("strategicForm needs payoffs for players 1 and 2")
    game = new_game(payoffs["1"], payoffs["2"], row_names, col_names)
    if rows and game.m != rows or cols and game.n != cols:
        raise InputError("strategicForm dimensions disagree with the payoff data")
    return game


def read_game_xml(text: str):
    """Either a GameTree or a BimatrixGame, depending on the payload."""
    game = _root_element(text)
    if game.find("strategicForm") is not None:
        _parse_players(game)
        return _parse_strategic(game.find("strategicForm"))
    return from_xml(text)
