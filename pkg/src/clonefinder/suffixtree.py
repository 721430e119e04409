"""Ukkonen's online suffix tree over integer symbol sequences.

The indexed sequence is the corpus symbol stream with one extra global
terminal appended (a fresh negative symbol), so every suffix ends at a
leaf.  Children are keyed by the first symbol of their edge because the
normalized-statement alphabet is unbounded.
"""
from __future__ import annotations


class Node:
    __slots__ = ("start", "end", "children", "link", "suffix_index")

    def __init__(self, start: int, end: int | None):
        self.start = start
        self.end = end  # None while the tree is under construction (open leaf)
        self.children: dict[int, Node] = {}
        self.link: Node | None = None
        self.suffix_index = -1

    def is_leaf(self) -> bool:
        return not self.children


class SuffixTree:
    def __init__(self, symbols: list[int], terminal: int = -(10**9)):
        if any(s == terminal for s in symbols):
            raise ValueError("terminal symbol occurs in sequence")
        self.text: list[int] = list(symbols) + [terminal]
        self.terminal = terminal
        self.root = Node(-1, -1)
        self._build()
        self._assign_suffix_indices()

    # -- construction ------------------------------------------------------

    def _build(self) -> None:
        text = self.text
        root = self.root
        active_node = root
        active_edge = -1
        active_length = 0
        remainder = 0
        for i, symbol in enumerate(text):
            remainder += 1
            last_new: Node | None = None
            while remainder > 0:
                if active_length == 0:
                    active_edge = i
                child = active_node.children.get(text[active_edge])
                if child is None:
                    active_node.children[text[active_edge]] = Node(i, None)
                    if last_new is not None:
                        last_new.link = active_node
                        last_new = None
                else:
                    edge_end = child.end if child.end is not None else i + 1
                    edge_len = edge_end - child.start
                    if active_length >= edge_len:
                        active_node = child
                        active_edge += edge_len
                        active_length -= edge_len
                        continue
                    if text[child.start + active_length] == symbol:
                        active_length += 1
                        if last_new is not None:
                            last_new.link = active_node
                            last_new = None
                        break
                    split = Node(child.start, child.start + active_length)
                    active_node.children[text[active_edge]] = split
                    split.children[symbol] = Node(i, None)
                    child.start += active_length
                    split.children[text[child.start]] = child
                    if last_new is not None:
                        last_new.link = split
                    last_new = split
                remainder -= 1
                if active_node is root and active_length > 0:
                    active_length -= 1
                    active_edge = i - remainder + 1
                elif active_node is not root:
                    active_node = active_node.link if active_node.link is not None else root
        # freeze open leaf ends
        n = len(text)
        stack = [root]
        while stack:
            node = stack.pop()
            if node.end is None:
                node.end = n
            stack.extend(node.children.values())
        root.start, root.end = 0, 0

    def _assign_suffix_indices(self) -> None:
        n = len(self.text)
        stack: list[tuple[Node, int]] = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            depth += node.end - node.start
            if node.is_leaf():
                node.suffix_index = n - depth
            else:
                for child in node.children.values():
                    stack.append((child, depth))

    # -- queries -----------------------------------------------------------

    def edge_length(self, node: Node) -> int:
        return node.end - node.start

    def occurrences(self, node: Node) -> list[int]:
        """Suffix start positions of all leaves below *node*."""
        out: list[int] = []
        stack = [node]
        while stack:
            cur = stack.pop()
            if cur.is_leaf():
                out.append(cur.suffix_index)
            else:
                stack.extend(cur.children.values())
        return out

    def iter_suffixes(self):
        """Yield every root-to-leaf word (for oracle checks on small inputs)."""
        stack: list[tuple[Node, tuple[int, ...]]] = [(self.root, ())]
        while stack:
            node, prefix = stack.pop()
            word = prefix + tuple(self.text[node.start:node.end])
            if node.is_leaf():
                yield word
            else:
                for child in node.children.values():
                    stack.append((child, word))

    def node_count(self) -> int:
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(node.children.values())
        return count


def build(symbols: list[int], terminal: int | None = None) -> SuffixTree:
    if terminal is None:
        terminal = min([0] + list(symbols)) - 1
    return SuffixTree(symbols, terminal=terminal)
