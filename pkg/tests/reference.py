"""Frozen reference data shared by several test modules."""

# reference listing of the six classes, ten representatives each
REFERENCE_COLUMNS = [
    [
        '(12 -> 43) + 65', '(21 -> 53) + 64', '(13 -> 42) + 56', '(31 -> 62) + 54', '(14 -> 25) + 63',
        '(41 -> 26) + 53', '(15 -> 24) + 36', '(51 -> 23) + 46', '(61 -> 32) + 45', '(16 -> 52) + 43',
    ],
    [
        '(12 -> 35) + 64', '(21 -> 36) + 54', '(13 -> 24) + 65', '(31 -> 26) + 45', '(14 -> 23) + 56',
        '(41 -> 25) + 36', '(15 -> 32) + 46', '(51 -> 62) + 43', '(16 -> 42) + 35', '(61 -> 52) + 34',
    ],
    [
        '(12 -> 53) + 46', '(21 -> 63) + 45', '(13 -> 52) + 64', '(31 -> 42) + 65', '(14 -> 62) + 53',
        '(41 -> 32) + 56', '(15 -> 26) + 43', '(51 -> 24) + 63', '(16 -> 25) + 34', '(61 -> 23) + 54',
    ],
    [
        '(12 -> 54) + 63', '(21 -> 34) + 65', '(13 -> 25) + 46', '(31 -> 24) + 56', '(14 -> 52) + 36',
        '(41 -> 62) + 35', '(15 -> 23) + 64', '(51 -> 26) + 34', '(16 -> 32) + 54', '(61 -> 42) + 53',
    ],
    [
        '(12 -> 34) + 56', '(21 -> 35) + 46', '(13 -> 26) + 54', '(31 -> 25) + 64', '(14 -> 32) + 65',
        '(41 -> 52) + 63', '(15 -> 62) + 34', '(51 -> 42) + 36', '(16 -> 23) + 45', '(61 -> 24) + 35',
    ],
    [
        '(12 -> 63) + 54', '(21 -> 43) + 56', '(13 -> 62) + 45', '(31 -> 52) + 46', '(14 -> 26) + 35',
        '(41 -> 23) + 65', '(15 -> 42) + 63', '(51 -> 32) + 64', '(16 -> 24) + 53', '(61 -> 25) + 43',
    ],
]
