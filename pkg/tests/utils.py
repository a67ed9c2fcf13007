from plucker_asl.lattice import PairIndex, Sublattice


def str_dedent(s: str) -> str:
    return "\n".join([x.lstrip() for x in s.split("\n")]).lstrip("\n").rstrip("\n")


def examples(input_rows: str):
    """Take input where each line looks like
    value     -> expected
    #value    -> expected (commented out)
    """
    for row in input_rows.split("\n"):
        row = row.strip()
        if row == "" or row.startswith("#"):
            continue
        if "->" in row:
            value, expected = row.split("->")
        else:
            value, expected = row, "None"
        yield value.strip(), expected.strip()


def pairs(text: str):
    """``"12 13 47"`` as pair indices; every index is a single digit."""
    return [PairIndex(int(word[0]), int(word[1])) for word in text.split()]


def sublattice(n: int, text: str) -> Sublattice:
    return Sublattice(n, pairs(text))


#: A perfect compatible sublattice of L_7 with cliques [1,5], [2,6], [4,7]
WIDE_OVERLAP_L7 = "12 13 14 15 23 24 25 26 34 35 36 45 46 47 56 57 67"

#: The perfect compatible sublattices of L_5 with their clique systems
PERFECT_L5 = {
    "[1,5]": "12 13 14 15 23 24 25 34 35 45",
    "[1,4][2,5]": "12 13 14 23 24 25 34 35 45",
    "[1,4][3,5]": "12 13 14 23 24 34 35 45",
    "[1,3][2,5]": "12 13 23 24 25 34 35 45",
    "[1,3][2,4][3,5]": "12 13 23 24 34 35 45",
}

#: Maximal allowed arc arrangements on five points
ARRANGEMENTS_5 = {
    "A1": "12 23 13 24 14 25 15",
    "A2": "23 34 14 25 13 24 15",
    "A3": "23 34 14 25 13 35 15",
    "A4": "23 34 14 25 24 35 15",
    "A5": "45 34 14 25 24 35 15",
}


def arcs(text: str):
    return [(int(word[0]), int(word[1])) for word in text.split()]
