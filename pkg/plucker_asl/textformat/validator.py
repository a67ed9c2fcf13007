from typing import List, Optional

from lark import Tree, Visitor
from lark.lexer import Token

from plucker_asl.exceptions import FormatIssue


def _tokens(tree) -> List[Token]:
    return [child for child in tree.children if isinstance(child, Token)]


def _variable_key(tree: Tree) -> tuple:
    return (tree.data,) + tuple(int(tok) for tok in _tokens(tree))


class IndexValidator(Visitor):
    def __init__(self, text: str, n: Optional[int] = None):
        """Visit the tree and collect a list of errors.

        The grammar accepts any integers so that, rather than returning parse
        errors, we can point to the index that is out of range.

        Args:
            text (str): A copy of the parsed text for error descriptions
            n (int, optional): Ambient size; indices above it are errors
        """
        self.text = text
        self.n = n
        # Errors encountered while visiting the tree
        self.errors: List[FormatIssue] = []

    def _get_context_for_pos(self, pos: int, span: int = 40) -> str:
        start = max(pos - span, 0)
        end = pos + span
        before = self.text[start:pos].rsplit("\n", 1)[-1]
        after = self.text[pos:end].split("\n", 1)[0]
        # Make a pointer to the position where the issue occurred
        return before + after + "\n" + " " * len(before) + "^\n"

    def _add_error(self, message: str, tok: Token):
        self._add_error_at(message, tok.start_pos)

    def _add_error_at(self, message: str, pos: int):
        self.errors.append(
            FormatIssue(
                message=message,
                description=self._get_context_for_pos(pos),
                pos=pos,
            )
        )

    def _check_pair(self, tree: Tree, what: str):
        first, second = _tokens(tree)[-2:]
        a, b = int(first), int(second)
        if a < 1:
            self._add_error(f"{what} index must be at least 1", first)
        elif a >= b:
            self._add_error(f"{what} needs increasing indices, got ({a},{b})", first)
        elif self.n is not None and b > self.n:
            self._add_error(f"{what} index {b} exceeds n = {self.n}", second)

    def plucker(self, tree):
        self._check_pair(tree, "Plücker variable")

    def _check_aux(self, tree):
        tok = _tokens(tree)[0]
        if int(tok) < 1:
            self._add_error("auxiliary index must be at least 1", tok)
        elif self.n is not None and int(tok) > self.n:
            self._add_error(f"auxiliary index {tok} exceeds n = {self.n}", tok)

    aux_x = _check_aux
    aux_y = _check_aux

    def coefficient(self, tree):
        toks = _tokens(tree)
        if len(toks) == 2 and int(toks[1]) == 0:
            self._add_error("zero denominator", toks[1])

    def pair(self, tree):
        self._check_pair(tree, "pair")

    def interval(self, tree):
        self._check_pair(tree, "interval")

    def arc(self, tree):
        self._check_pair(tree, "arc")

    def node(self, tree):
        self._check_pair(tree, "tree label")

    def elim_order(self, tree):
        keep_clause, vars_clause = tree.children
        keep = [_variable_key(v) for v in keep_clause.children[0].children if v is not None]
        names = [_variable_key(v) for v in vars_clause.children[0].children if v is not None]
        tail = names[len(names) - len(keep) :] if keep else []
        if sorted(tail) != sorted(keep) or len(set(names)) != len(names):
            self._add_error_at(
                "kept variables must be the last entries of vars",
                getattr(tree.meta, "start_pos", 0),
            )
