# Published scalar generator matrices, columns in block order
# (column j*m + k holds coefficient k of component j).

GENMATS = {
    "14_7_4": [
        [1, 0, 0, 0, 0, 0, 2, 0, 0, 2, 2, 2, 0, 1],
        [0, 1, 0, 0, 0, 0, 1, 0, 2, 2, 2, 1, 1, 0],
        [0, 0, 1, 0, 0, 0, 2, 0, 0, 1, 1, 1, 1, 2],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 2, 2],
        [0, 0, 0, 0, 1, 0, 2, 0, 1, 2, 0, 1, 2, 2],
        [0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 2, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 2, 1, 2, 1],
    ],
    "20_10_4": [
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 0, 1, 2, 2, 0, 2],
        [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 2, 0, 1, 2, 2, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 2, 0, 1, 2, 2],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 2, 0, 1, 2],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 2, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 1, 1, 0, 1, 1, 0, 1, 2, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 1, 1, 0, 1, 1, 0, 1, 2],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 2, 1, 1, 0, 1, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 0, 2, 1, 1, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 0, 2, 1, 1, 0, 1, 1],
    ],
    "16_7_5": [
        [1, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 1, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 2, 2, 1, 2, 0, 1],
        [0, 0, 0, 1, 0, 0, 0, 2, 2, 0, 1, 0, 1, 0, 2, 0],
        [0, 0, 0, 0, 1, 0, 0, 1, 2, 1, 2, 0, 1, 2, 0, 2],
        [0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2, 0, 2, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 2, 1, 1, 0, 0, 2],
    ],
    "8_2_6": [
        [1, 0, 1, 1, 2, 1, 0, 1],
        [0, 1, 1, 2, 1, 0, 1, 1],
    ],
    "21_6_8": [
        [1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0],
        [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
        [0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0],
    ],
    "21_7_6": [
        [1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0],
    ],
}
