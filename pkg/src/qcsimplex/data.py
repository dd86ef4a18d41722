"""Published constants: generators, offsets and expected parameters.

Octal strings use the highest-degree-left convention. For m = 7 the
published distance vector and offsets are realized with the repeated and
shifted generators in the order given by ``PAIR_GENERATORS[7]``, which is
the reverse of the labels used in the worked example.
"""

from __future__ import annotations

# Worked example, as labelled in print: g1 = x^4+x^3+x^2+1, g2 = x^4+x^2+x+1.
EXAMPLE1_G1 = "35"
EXAMPLE1_G2 = "27"
EXAMPLE1_P = 3
EXAMPLE1_OFFSETS = (1, 2)
EXAMPLE1_D = 8
EXAMPLE1_PARAMS = (21, 6, 8)

# (repeated generator, shifted generator, k) per block length m.
PAIR_GENERATORS = {
    7: ("27", "35", 3),
    15: ("7531", "4657", 4),
    31: ("454761565", "715750453", 5),
    63: ("10305172162267315277", "13745214756551542207", 6),
}

# Distance vectors exactly as printed. The m = 31 and m = 63 lists are
# shorter than m in the source text.
PUBLISHED_DISTANCE_VECTORS = {
    7: (2, 4, 4, 6, 2, 2, 4),
    15: (8, 6, 8, 4, 6, 10, 8, 6, 4, 10, 6, 10, 10, 8, 8),
    31: (12, 12, 16, 16, 20, 12, 16, 20, 16, 16, 20, 16, 16, 16, 12, 16, 20, 16, 12, 12,
         12, 16, 12, 20, 16, 16, 16, 12, 20, 12),
    63: (32, 32, 24, 40, 32, 32, 40, 32, 32, 32, 32, 32, 24, 32, 32, 32, 32, 24, 32, 40,
         32, 32, 32, 32, 32, 32, 32, 40, 32, 32, 32, 32, 24, 32, 32, 32, 32, 32, 32, 24,
         24, 24, 32, 24, 40, 32, 32, 24, 32, 40, 32, 32, 32),
}

# Good 2-generator codes: (p, m, k, d, offsets a(1..p-1)). Code is [m*p, 2k, d].
TABLE_2GEN = (
    (3, 7, 3, 8, (1, 2)),
    (4, 7, 3, 12, (1, 2, 4)),
    (5, 7, 3, 16, (0, 3, 5, 6)),
    (7, 7, 3, 24, (1, 2, 3, 4, 5, 6)),
    (2, 15, 4, 12, (3,)),
    (5, 15, 4, 34, (1, 3, 6, 13)),
    (10, 15, 4, 72, (1, 3, 4, 6, 7, 9, 10, 12, 13)),
    (11, 15, 4, 80, (1, 2, 3, 4, 5, 6, 9, 11, 12, 13)),
    (12, 15, 4, 88, (1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13)),
    (15, 15, 4, 112, tuple(range(1, 15))),
    (5, 31, 5, 72, (1, 3, 6, 18)),
    (6, 31, 5, 88, (1, 4, 7, 19, 28)),
    (2, 63, 6, 56, (21,)),
    (3, 63, 6, 88, (21, 42)),
)

# (m, p) pairs whose 2-generator codes are two-weight codes.
TWO_WEIGHT_CASES = ((7, 3), (7, 4), (7, 7), (15, 10), (15, 11), (15, 12), (15, 15))

TRIPLE_GENERATORS = {
    31: ("535437151", "454761565", "715750453", 5),
    127: (
        "0017725147351306755331107027625632117050301",
        "11151734177073051372502674712630155350621",
        "14111773707251275147153042731036267012155",
        7,
    ),
}

# 3-generator base codes: name -> (m, a, b, (n, k, d)).
THREE_GEN_CODES = {
    "93_15_36": (31, (1, 18), (30, 2), (93, 15, 36)),
    "254_21_104": (127, (21,), (43,), (254, 21, 104)),
}

# Extended codes: name -> (base, unit row patterns, block parity, (n, k, d)).
EXTENDED_CODES = {
    "93_17_34": ("93_15_36", ((1, 1, 0), (1, 0, 1)), False, (93, 17, 34)),
    "96_17_36": ("93_15_36", ((1, 1, 0), (1, 0, 1)), True, (96, 17, 36)),
    "254_23_102": ("254_21_104", ((1, 0), (0, 1)), False, (254, 23, 102)),
    "256_23_104": ("254_21_104", ((1, 0), (0, 1)), True, (256, 23, 104)),
}

# The displayed extended matrices differ from the base offsets. Per extended
# code: candidate shift overrides {group index: shifts} to try, first entry
# being the base code's own offsets.
EXTENSION_VARIANTS = {
    "93_15_36": (
        ("base offsets", {}),
        ("displayed G3,1 in last block", {2: (0, 30, 30)}),
    ),
    "254_21_104": (
        ("base offsets", {}),
        ("displayed unshifted G2, G3", {1: (0, 0), 2: (0, 0)}),
    ),
}

# Offsets found by exhaustive search that give a two-weight code where the
# tabulated offsets do not.
TWO_WEIGHT_ALTERNATES = {
    (7, 3): (1, 5),
}
