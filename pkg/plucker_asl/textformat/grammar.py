"""Lark grammars for the plain-text formats.

One parser serves every format through separate start rules:

    polynomial      p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]
    order_line      order: elim keep=[p[2,3]] vars=[p[1,2],p[2,3]]
    pair_file       n: 5 followed by "i j" lines
    clique_system   [1,3][2,5]
    arrangement     n=5; arcs=(1,2),(2,3)
    tree            (()@[1,2]()@[2,3])@[1,3]
"""

START_RULES = (
    "polynomial",
    "order_line",
    "pair_file",
    "clique_system",
    "arrangement",
    "tree",
)


def make_polynomial_rules() -> str:
    """Rules for polynomials. Terms are signed; a term is an optional
    rational coefficient followed by variables with optional powers."""
    return r"""
    polynomial: first_term (SIGN term)*
    first_term: SIGN? term
    term: coefficient ("*" factor)*   -> scaled_term
        | factor ("*" factor)*        -> plain_term
    coefficient: INT ("/" INT)?
    factor: variable ("^" INT)?
    ?variable: "p" "[" INT "," INT "]"  -> plucker
             | "x" "[" INT "]"          -> aux_x
             | "y" "[" INT "]"          -> aux_y
    SIGN: "+" | "-"
"""


def make_order_rules() -> str:
    """Header line of an ideal file. Variable lists run largest first."""
    return r"""
    order_line: "order" ":" order_spec
    ?order_spec: "lex" vars_clause                 -> lex_order
               | "revlex" vars_clause              -> revlex_order
               | "elim" keep_clause vars_clause    -> elim_order
    keep_clause: "keep" "=" var_list
    vars_clause: "vars" "=" var_list
    var_list: "[" [variable ("," variable)*] "]"
"""


def make_combinatorics_rules() -> str:
    return r"""
    pair_file: "n" ":" INT pair*
    pair: INT INT

    clique_system: interval+
    interval: "[" INT "," INT "]"

    arrangement: "n" "=" INT ";" "arcs" "=" [arc ("," arc)*]
    arc: "(" INT "," INT ")"

    tree: node
    node: "(" [node node] ")" "@" "[" INT "," INT "]"
"""


def make_grammar() -> str:
    """Assemble the full grammar text."""
    return "\n".join(
        [
            make_polynomial_rules(),
            make_order_rules(),
            make_combinatorics_rules(),
            r"""
    COMMENT: /#[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
""",
        ]
    )
