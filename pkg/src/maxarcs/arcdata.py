"""Point sets of eleven maximal (52,4)-arcs in non-Desarguesian planes of order 16.

Indices refer to the published line sets of the planes (file
``planesOForder16.txt``); they are meaningless against any other numbering.
"""

from __future__ import annotations

KNOWN_ARCS: dict[str, tuple[str, tuple[int, ...]]] = {
    "DEMP.3": ("DEMP", (
        263, 265, 266, 258, 32, 122, 142, 243, 187, 102, 61, 197, 84, 232,
        210, 156, 18, 126, 140, 251, 181, 112, 52, 195, 88, 237, 214, 154, 30, 117, 144, 244,
        178, 109, 54, 202, 83, 236, 219, 152, 24, 116, 139, 252, 189, 99, 62, 208, 82, 229,
        218, 150,
    )),
    "DEMP.4": ("DEMP", (
        273, 260, 257, 258, 14, 69, 61, 27, 34, 128, 255, 232, 153, 97, 84,
        186, 7, 71, 60, 22, 39, 124, 246, 227, 147, 108, 86, 179, 8, 68, 63, 32, 45, 122, 242,
        225, 149, 110, 89, 187, 133, 194, 224, 175, 222, 161, 212, 138, 200, 141, 203, 169,
    )),
    "SEMI2.3": ("SEMI2", (
        263, 268, 265, 267, 23, 28, 228, 25, 27, 234, 240, 229, 4, 16, 124,
        5, 123, 10, 121, 119, 49, 251, 76, 63, 56, 145, 252, 247, 75, 73, 50, 159, 152, 249, 71,
        146, 36, 88, 202, 48, 37, 216, 82, 81, 197, 208, 42, 210, 209, 95, 196, 223,
    )),
    "SEMI2.4": ("SEMI2", (
        259, 269, 262, 270, 20, 233, 32, 21, 231, 236, 26, 235, 4, 16, 124,
        5, 123, 10, 121, 119, 33, 90, 208, 47, 40, 209, 85, 96, 196, 202, 34, 223, 216, 84, 197,
        210, 49, 251, 66, 63, 56, 155, 252, 247, 72, 79, 50, 156, 151, 249, 65, 153,
    )),
    "SEMI2.5": ("SEMI2", (
        260, 272, 266, 261, 23, 27, 121, 25, 124, 28, 119, 123, 1, 2, 232,
        15, 239, 8, 225, 226, 66, 146, 69, 154, 72, 152, 74, 149, 49, 241, 58, 245, 63, 255, 53,
        250, 36, 96, 44, 219, 48, 89, 199, 84, 224, 43, 212, 220, 196, 87, 208, 201,
    )),
    "SEMI2.6": ("SEMI2", (
        260, 268, 266, 263, 18, 136, 216, 26, 25, 153, 133, 135, 30, 213,
        215, 131, 158, 146, 211, 154, 35, 79, 120, 39, 37, 112, 80, 76, 40, 117, 119, 70, 111,
        102, 115, 108, 6, 175, 206, 12, 16, 57, 176, 172, 15, 201, 202, 166, 62, 50, 194, 58,
    )),
    "SEMI2.7": ("SEMI2", (
        261, 263, 271, 262, 25, 58, 250, 30, 32, 31, 128, 50, 60, 242, 252,
        54, 246, 127, 121, 126, 85, 110, 139, 88, 91, 93, 206, 105, 111, 141, 133, 112, 136,
        201, 207, 208, 5, 149, 70, 8, 11, 13, 226, 152, 155, 76, 66, 157, 74, 234, 230, 236,
    )),
    "LMRH.2": ("LMRH", (
        46, 78, 250, 90, 42, 74, 94, 254, 260, 266, 270, 269, 20, 29, 132,
        141, 4, 13, 164, 173, 25, 27, 50, 194, 137, 145, 209, 139, 9, 11, 146, 210, 169, 49,
        193, 171, 37, 70, 64, 195, 69, 147, 224, 38, 246, 208, 86, 51, 85, 211, 245, 160,
    )),
    "DEMP.5": ("DEMP", (
        1, 3, 8, 15, 23, 24, 25, 28, 36, 38, 41, 43, 51, 54, 61, 64, 66, 69, 70,
        78, 81, 82, 89, 96, 100, 104, 106, 109, 129, 133, 139, 140, 149, 154, 156, 160, 178,
        183, 189, 190, 195, 202, 206, 207, 228, 231, 235, 239, 257, 260, 271, 272,
    )),
    "HALL.2": ("HALL", (
        1, 2, 5, 14, 19, 27, 28, 32, 34, 39, 40, 45, 49, 53, 54, 63, 81, 84, 88,
        95, 103, 107, 108, 109, 131, 134, 142, 143, 147, 153, 154, 155, 166, 169, 170, 173,
        180, 183, 184, 185, 197, 202, 204, 208, 210, 212, 222, 224, 257, 260, 262, 266,
    )),
    "BBH1.3": ("BBH1", (
        11, 13, 14, 16, 18, 27, 30, 31, 34, 38, 39, 42, 55, 56, 59, 63, 65, 69,
        70, 79, 81, 85, 89, 91, 130, 135, 137, 144, 146, 153, 156, 159, 161, 167, 170, 173,
        181, 190, 191, 192, 197, 205, 207, 208, 241, 245, 246, 254, 262, 263, 266, 269,
    )),
}


def _cycles(text: str) -> list[tuple[int, ...]]:
    out = []
    for chunk in text.replace(" ", "").replace("\n", "").split(")"):
        chunk = chunk.strip("(")
        if chunk:
            out.append(tuple(int(x) for x in chunk.split(",")))
    return out


# Coordinate permutations in cycle notation mapping C(D(A)) onto C(D(A')).
# A trailing "^" on a label denotes the design of the dual arc.
TABLE5: list[tuple[str, str, list[tuple[int, ...]]]] = [
    ("DEMP.1^", "DEMP.5^", _cycles(
        "(1, 29, 13, 45)(2, 30, 16, 46, 4, 31, 14, 47)(3, 32, 15, 48)"
        "(5, 24, 7, 22)(6, 21, 8, 23)(9, 36, 10, 33)(11, 35)(12, 34)"
        "(18, 19, 20)(25, 28, 27, 26)(37, 41)(38, 42)(39, 43)(40, 44)")),
    ("SEMI2.2", "DEMP.2^", _cycles(
        "(1, 50, 37, 25, 17, 48, 8, 2, 51, 9, 11, 31, 13, 26, 45, 12, 7, 14,"
        "32, 39, 36, 18, 29, 40, 15, 10, 28, 35, 42, 6, 5)(3, 52, 46, 22,"
        "34, 27)(4, 49, 23, 24)(20, 21, 30)(38, 41, 43, 47)")),
    ("SEMI4.1", "SEMI2.7", _cycles(
        "(2, 33, 17, 31, 24, 29, 49, 35, 46, 51)(3, 42, 32, 45, 22, 21, 13,"
        "26, 48, 14, 38, 9, 40, 50, 4, 11, 47, 44, 5, 30, 6, 41, 8, 23, 10,"
        "18, 37, 25, 52)(7, 20, 39, 28, 34, 36, 12, 16, 27)")),
    ("JOWK.1", "MATH.2", _cycles(
        "(1, 50)(2, 24, 21, 25, 26, 13, 9, 30, 35, 31, 40, 6, 51, 4, 42, 23,"
        "43, 37, 5, 7, 49)(3, 20, 8, 10, 48, 36, 34, 14, 11, 28, 46, 52)"
        "(12, 29, 33, 16, 38, 27, 18, 39, 45, 32, 19)(15, 17, 44)(22, 41)")),
    ("JOHN.4", "MATH.2", _cycles(
        "(1, 5, 7, 8, 12, 2, 6, 10)(3, 11)(4, 9)(13, 29, 25, 50, 41, 38, 14,"
        "30, 28, 52, 37, 19, 32, 49, 16, 33, 26, 27, 24, 21, 47, 42, 18, 34,"
        "45, 43)(15, 35, 46, 20, 36, 22, 48, 40, 17, 31, 51, 44, 39)")),
    ("MATH.4^", "MATH.4", _cycles(
        "(1, 40, 14, 11, 48, 24, 13, 7, 41, 31, 3, 49, 5, 47, 35, 36, 27, 45,"
        "33, 30, 4, 52, 19, 25, 44, 28, 38, 6, 39, 12, 51, 18, 21, 17, 29)"
        "(2, 46, 34, 32)(8, 37, 20, 26, 42, 23)(9, 50)(10, 43, 22)")),
    ("DEMP.2", "DEMP.4", _cycles(
        "(2, 50)(3, 8, 51)(4, 12, 14, 52)(5, 28, 23, 20, 17, 21, 9, 7, 24, 15)"
        "(6, 42, 31, 49, 22, 36, 29, 39, 16)(11, 19, 18, 47, 27, 48, 46, 43,"
        "44, 40, 35, 33, 13, 30, 32, 45, 37, 41, 38, 25, 34)")),
    ("DSFP.1", "DEMP.3", _cycles(
        "(1, 49)(2, 51)(3, 24, 10, 6, 30, 25, 23, 21, 17, 22, 16, 41, 12, 26,"
        "44, 29, 40, 28, 32, 8, 13, 18, 52, 4, 7, 34, 11, 14, 43, 20, 33, 35,"
        "15, 50)(5, 48, 36, 27, 45, 39, 38, 31, 46, 42, 9, 47)(19, 37)")),
    ("LMRH.2", "SEMI2.1", _cycles(
        "(1, 9)(2, 6, 48, 47, 20, 42, 14, 36, 27, 16, 45, 17, 32, 40, 11, 3,"
        "12, 4, 15, 23, 37, 35, 52, 34, 49, 38, 8, 21, 10)(5, 51, 44)(7, 18,"
        "39, 25)(13, 29, 19, 26)(22, 33)(24, 43, 28, 30)(31, 46)")),
    ("LMRH.2^", "SEMI2.1", _cycles(
        "(6, 8, 20, 45, 51, 14, 32, 28, 46, 12, 21, 30, 34, 38, 10, 9)(7, 17,"
        "36, 44, 16, 26, 40, 22, 33, 35, 41, 49, 50, 11, 18, 39, 19, 42, 52,"
        "47, 15, 23, 24, 27, 43, 13, 29, 31, 25, 37)")),
    ("SEMI2.6", "SEMI2.1", _cycles(
        "(6, 11, 14, 28, 39, 7, 25, 18, 38, 13, 20, 44, 49, 27, 45, 46, 19,"
        "34, 23, 12, 47, 10, 35, 51, 22, 36, 26, 29, 21, 9, 17, 41, 43, 16,"
        "50, 30, 15, 31, 48, 52, 33, 32, 42, 24)")),
    ("DEMP.4^", "SEMI2.1", _cycles(
        "(1, 25)(2, 28, 4, 31, 49, 12, 50, 15, 41, 37, 10, 14, 38, 7, 29, 13,"
        "35, 17, 36, 20, 45, 9, 11, 47, 18, 39, 19, 42, 40, 22, 33, 5, 26)"
        "(3, 34, 8, 32, 52, 51, 48, 21, 27)(6, 23, 24, 30, 16, 44, 46)")),
    ("LMRH.1", "SEMI2.1", _cycles(
        "(6, 12, 17, 39, 44, 40, 32, 23, 45, 11, 24, 10, 27, 36, 29, 16, 20,"
        "7, 30, 35, 41, 37, 49, 9, 48, 47, 43, 21, 34, 38, 52, 18, 19, 25, 28,"
        "22, 42, 14, 15, 33, 13, 51, 50, 46)(26, 31)")),
    ("MATH.2^", "SEMI2.1", _cycles(
        "(1, 29)(2, 32, 4, 23, 43, 41, 35, 28, 45, 5, 6, 9, 12, 51, 19, 47, 17,"
        "11, 48, 20, 50, 10, 15, 24, 46, 8, 21, 37, 13, 30)(3, 26, 39, 49, 7,"
        "18, 14, 27, 42, 38, 16, 33, 31)(22, 40, 52)(25, 36, 34)")),
    ("MATH.3", "SEMI2.1", _cycles(
        "(1, 5)(2, 8, 4, 11, 34, 21, 6)(3, 14, 20, 31, 32, 51, 52, 22, 15, 47,"
        "33, 42, 7)(9, 25)(10, 35, 45)(12, 41, 46, 40, 24, 36, 26, 23)(13, 50,"
        "49, 27, 29, 48, 43, 19, 28, 39, 30, 18, 44)(16, 17, 38)")),
    ("MATH.3^", "SEMI2.1", _cycles(
        "(1, 29)(2, 32, 4, 23, 19, 41, 31, 3, 26, 39, 43, 28, 45, 5, 6, 9, 12,"
        "51, 49, 13, 30)(7, 18, 38, 40, 46, 8, 21)(10, 15, 24, 22)(11, 48, 20,"
        "44, 34, 14, 27, 42, 25, 36, 50, 16, 33)(17, 35, 47)")),
    ("MATH.6^", "SEMI2.1", _cycles(
        "(1, 29)(2, 32, 4, 23, 41, 17, 7, 21, 27, 36, 14, 38, 24, 25, 39, 28,"
        "45, 43, 46, 47, 20, 37, 44, 50, 34, 8, 18, 5, 6, 9, 12, 48, 19, 11,"
        "15, 13, 30)(3, 26, 42, 22, 52, 35, 40, 49, 16, 31)(10, 51, 33)")),
    ("MATH.7^", "SEMI2.1", _cycles(
        "(1, 29)(2, 32, 4, 23, 49, 34, 50, 33, 8, 18, 11, 51, 41, 46, 19, 5,"
        "6, 9, 12, 48, 20, 40, 52, 16, 38, 28, 45, 43, 14, 31, 3, 26, 42, 22,"
        "25, 39, 24, 27, 36, 37, 44, 17, 7, 21, 35, 10, 15, 13, 30)")),
    ("JOHN.1", "SEMI2.1", _cycles(
        "(1, 6)(2, 12, 48, 27, 43, 50, 30, 34, 36, 14, 35, 32, 42, 23, 40,"
        "26, 41, 31, 11, 18, 13, 8, 4, 9, 51, 22, 52, 33, 25, 37, 28, 46, 7,"
        "21, 17, 44, 45, 10)(5, 15, 38, 39, 47, 24, 20, 49, 19, 16)")),
    ("JOHN.1^", "MATH.6", _cycles(
        "(1, 45)(2, 46)(3, 47)(4, 48)(5, 29, 42, 40, 25, 24, 36, 37, 17, 18,"
        "26, 13, 9)(6, 30, 39, 20, 22, 34, 43, 49, 27, 14, 10)(7, 31, 50,"
        "28, 16, 12, 8, 32, 51, 23, 35, 44, 52, 15, 11)(19, 21, 33, 41, 38)")),
    ("JOHN.2^", "MATH.6", _cycles(
        "(1, 45)(2, 46)(3, 47)(4, 48)(5, 29, 42, 40, 25, 24, 36, 37, 17, 18,"
        "26, 13, 9)(6, 30, 39, 20, 22, 34, 43, 49, 27, 14, 10)(7, 31, 50,"
        "28, 16, 12, 8, 32, 51, 23, 35, 44, 52, 15, 11)(19, 21, 33, 41, 38)")),
    ("JOHN.3^", "MATH.6", _cycles(
        "(1, 37)(2, 38)(3, 40, 4, 41, 33, 29, 15, 24, 52, 8, 46, 10, 17, 47,"
        "11, 19, 50, 6, 42, 34, 30, 25, 13, 21, 43, 35, 31, 27, 16, 18,"
        "48, 12, 20, 51, 7, 45, 9, 23, 49, 5, 39)(14, 22, 44, 36, 32, 28, 26)")),
    ("JOHN.4^", "MATH.6", _cycles(
        "(1, 37)(2, 38)(3, 40, 4, 41, 33, 29, 15, 24, 52, 8, 46, 10, 17, 47,"
        "11, 19, 50, 6, 42, 34, 30, 25, 13, 21, 43, 35, 31, 27, 16, 18,"
        "48, 12, 20, 51, 7, 45, 9, 23, 49, 5, 39)(14, 22, 44, 36, 32, 28, 26)")),
    ("MATH.7", "MATH.6", _cycles(
        "(6, 10, 13, 16, 21, 17)(7, 19, 23, 28, 22, 11, 36, 48, 49, 20, 47,"
        "35, 43, 40)(8, 29, 39, 32, 37, 26)(9, 27, 34, 18, 45, 31, 30,"
        "24, 14, 42)(12, 33, 46, 44, 15, 38, 51, 52, 25, 50, 41)")),
    ("MATH.1^", "MATH.1", _cycles(
        "(1, 33)(2, 7, 47, 38, 52, 41, 32, 24, 13, 36, 4, 25, 19, 9, 34)"
        "(3, 8, 12, 28, 15, 26, 20, 17, 46, 37, 49, 16, 10, 35)(5, 27, 50,"
        "31, 22, 23, 51, 39, 14, 6, 45, 30, 18, 48, 43, 42, 40, 29, 11)")),
    ("HALL.1", "MATH.1", _cycles(
        "(6, 10, 13, 16, 21, 17)(7, 19, 23, 28, 22, 11, 36, 48, 49, 20, 47,"
        "35, 43, 40)(8, 29, 39, 32, 37, 26)(9, 27, 34, 18, 45, 31, 30,"
        "24, 14, 42)(12, 33, 46, 44, 15, 38, 51, 52, 25, 50, 41)")),
    ("DEMP.1", "HALL.2", _cycles(
        "(1, 51, 37, 46, 31, 36, 43, 28, 27, 16, 26, 52, 50, 49, 41, 23, 25,"
        "47, 32, 40, 4, 22, 3, 2)(5, 7, 13, 24)(6, 33, 10, 42, 18, 17, 35,"
        "12, 9, 8, 19, 39, 14, 11, 15, 29)(20, 45, 21)(38, 48, 44)")),
    ("DEMP.5", "HALL.2", _cycles(
        "(1, 49, 51, 48, 16, 34, 40, 37, 4, 19, 46, 42, 7, 26, 25, 6, 2, 17,"
        "23, 11, 5, 24, 22, 39, 32, 45, 41, 50, 52, 47, 15, 31, 36, 29, 44,"
        "38, 8, 3)(9, 28, 27, 10, 30, 33, 18, 35)(20, 43)")),
]

# Code equivalence classes (members listed by arc label; "^" = dual arc).
TABLE3_CLASSES: list[tuple[int, tuple[str, ...], tuple[int, int]]] = [
    (41, ("PG(2,16).1",), (0, 221)),
    (41, ("PG(2,16).2",), (0, 221)),
    (43, ("HALL.1^",), (6, 1037)),
    (45, ("DEMP.1^", "DEMP.5^"), (24, 3989)),
    (45, ("DEMP.2^", "SEMI2.2"), (6, 4325)),
    (45, ("SEMI4.1", "SEMI2.7"), (0, 4469)),
    (45, ("SEMI2.3",), (18, 4165)),
    (45, ("SEMI2.4",), (16, 4277)),
    (45, ("HALL.2^",), (12, 4229)),
    (46, ("JOHN.3",), (42, 8293)),
    (46, ("JOHN.4", "JOWK.1", "MATH.2"), (26, 8613)),
    (46, ("JOWK.2^",), (46, 8325)),
    (46, ("MATH.4", "MATH.4^"), (42, 8549)),
    (46, ("MATH.5^",), (42, 8549)),
    (46, ("SEMI2.5",), (50, 8453)),
    (47, ("BBH1.1",), (120, 16853)),
    (47, ("DEMP.2", "DEMP.4"), (72, 17045)),
    (47, ("DSFP.1", "DEMP.3"), (74, 16997)),
    (47, ("DSFP.1^",), (66, 17093)),
    (47, ("JOHN.1", "LMRH.1", "LMRH.2", "LMRH.2^", "MATH.2^", "MATH.3", "MATH.3^",
          "MATH.6^", "MATH.7^", "SEMI2.1", "SEMI2.6", "DEMP.4^"), (78, 16901)),
    (47, ("JOWK.1^",), (94, 16709)),
    (47, ("MATH.5",), (106, 16869)),
    (47, ("DEMP.3^",), (98, 16965)),
    (48, ("JOHN.1^", "JOHN.2^", "JOHN.3^", "JOHN.4^", "MATH.6", "MATH.7"), (174, 33669)),
    (48, ("BBH1.3",), (186, 33829)),
    (49, ("HALL.1", "MATH.1", "MATH.1^"), (366, 67205)),
    (49, ("DEMP.1", "DEMP.5", "HALL.2"), (408, 67541)),
]
