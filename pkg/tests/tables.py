"""Published chain-number tables, frozen as literals.

COLUMN_TABLE[m][k] lists #Sigma^k_n C^n_m for n = 0..5 (column axis).
ROW_TABLE[n][k] lists #Sigma^k_m C^n_m for m = 0..5 (row axis).
"""

COLUMN_TABLE = {
    0: {
        0: [1, 1, 1, 1, 1, 1],
        1: [1, 1, 1, 1, 1, 1],
        2: [1, 1, 2, 5, 14, 42],
        3: [1, 1, 5, 42, 462, 6006],
        4: [1, 1, 14, 462, 24024, 1662804],
    },
    1: {
        0: [1, 1, 2, 6, 24, 120],
        1: [1, 1, 3, 15, 105, 945],
        2: [1, 1, 7, 106, 2575, 87595],
        3: [1, 1, 19, 1075, 115955, 19558470],
        4: [1, 1, 56, 13326, 7364321, 7236515981],
    },
    2: {
        0: [1, 1, 6, 90, 2520, 113400],
        1: [1, 1, 10, 280, 15400, 1401400],
        2: [1, 1, 25, 2305, 482825, 183500625],
        3: [1, 1, 71, 25911, 25754021, 52213860026],
        4: [1, 1, 216, 345651, 1848745731, 23070700145026],
    },
    3: {
        0: [1, 1, 20, 1680, 369600, 168168000],
        1: [1, 1, 35, 5775, 2627625, 2546168625],
        2: [1, 1, 91, 51821, 94597041, 404793761526],
        3: [1, 1, 266, 621831, 5616763761, 134269580611026],
        4: [1, 1, 827, 8721245, 438307511209, 66953592509190248],
    },
}

# n=1, k=1, m=3 is printed as 15 beside a Catalan label; the Catalan value 5 is kept.
ROW_TABLE = {
    0: {
        0: [1, 1, 1, 1, 1, 1],
        1: [1, 1, 1, 1, 1, 1],
        2: [1, 1, 2, 5, 14, 42],
        3: [1, 1, 5, 42, 462, 6006],
        4: [1, 1, 14, 462, 24024, 1662804],
    },
    1: {
        0: [1, 1, 1, 1, 1, 1],
        1: [1, 1, 2, 5, 14, 42],
        2: [1, 1, 5, 42, 462, 6006],
        3: [1, 1, 14, 462, 24024, 1662804],
        4: [1, 1, 42, 6006, 1662804, 701149020],
    },
    2: {
        0: [1, 2, 6, 20, 70, 252],
        1: [1, 2, 16, 192, 2816, 46592],
        2: [1, 2, 46, 2240, 160504, 14594568],
        3: [1, 2, 140, 30108, 11721144, 6625780016],
        4: [1, 2, 444, 448272, 1024045836, 3936970992944],
    },
    3: {
        0: [1, 6, 90, 1680, 34650, 756756],
        1: [1, 6, 288, 24444, 2738592, 361998432],
        2: [1, 6, 918, 363984, 234506712, 203517798360],
        3: [1, 6, 2988, 5753484, 22547430432, 137927632096368],
        4: [1, 6, 9936, 96198840, 2404039625820, 109858268535649608],
    },
}
