"""Regenerate src/crnbif/data/manifest.json (published tables and counts, typed in by hand)."""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "crnbif" / "data" / "manifest.json"


def grid(fixed, rows, cols, cells, group):
    out = []
    for fx in fixed:
        for r, line in zip(rows, cells):
            for c, sym in zip(cols, line):
                if sym:
                    out.append({"text": f"{fx}; {r}; {c}", "mark": sym, "group": group})
    return out


def fold_bimolecular():
    rows = []
    g1 = ["2X->0", "2X->Y", "2X->2Y", "Y->X", "Y->2X", "Y->X+Y", "2Y->X", "2Y->2X"]
    rows += grid(["X->2X; X+Y->0"], ["0->Y", "Y->2Y"], g1, [["*"] * 8, [""] * 6 + ["*", "*"]], 1)
    g2 = ["0->Y", "0->X+Y", "X->Y", "X->X+Y", "X->2Y", "2Y->0", "2Y->X", "2Y->2X"]
    rows += grid(["Y->2X; X+Y->2Y"], ["X->0", "2X->0"], g2,
                 [["*", "*", "", "", "", "o", "o", ""], ["*"] * 5 + ["o"] * 3], 2)
    g3 = ["0->X", "0->Y", "0->X+Y", "2Y->0", "2Y->X", "X+Y->0", "X+Y->X", "X+Y->Y"]
    rows += grid(["Y->2X; 2X->2Y"], ["X->0"], g3, [["*"] * 3 + ["o"] * 5], 3)
    for r in rows:
        r["stable_origin"] = r.pop("mark") == "o"
    return rows


def hopf_table():
    G = []
    g1r = ['X->2Y', 'X->3Y', 'X->X+Y', '2X->Y', '2X->2Y', '2X->3Y', '2X->X+2Y', '2X->2X+Y']
    g1c = ['X->2X', '0->X', '0->2X+Y', 'Y->0', 'Y->X', 'Y->2X', 'Y->3X', 'Y->X+Y']
    G += grid(['2X->3X; X+Y->0'], g1r, g1c, [['', '', '', '', '', '+', '+', ''], ['', '', '', '', '+', '+', '+', ''],
                                            ['', '', '', '', '+', '+', '+', '']] + [['0'] + ['-'] * 7] * 5, 1)
    g2c = ['Y->0', 'Y->X', 'Y->2X', 'Y->3X', '2Y->0', '2Y->X', '2Y->2X', '2Y->3X', '2Y->2X+Y']
    g2r = ['X->Y', 'X->2Y', 'X->3Y', 'X->X+Y', 'X->2X+Y', '2X->Y', '2X->2Y', '2X->3Y', '2X->X+2Y', '2X->2X+Y']
    G += grid(['2X->3X; X+Y->Y'], g2r, g2c, [['', '', '+', '+'], ['', '+', '+', '+'], ['', '+', '+', '+'],
                                            ['', '+', '+', '+'], ['0', 'M', 'M', 'M', '+', '+', '+', '+', '+']]
              + [['-'] * 4] * 5, 2)
    g3c = ['0->X', '0->2X+Y', '0->X+Y', '0->X+2Y', '0->Y', 'X->2X', 'X->2X+Y', 'X->X+Y', 'X->3Y', 'X->2Y', 'X->Y',
           'Y->X', 'Y->2X', 'Y->3X', 'Y->X+Y', 'Y->X+2Y', '2X->2X+Y', '2X->X+2Y', '2X->3Y', '2X->2Y', '2X->Y',
           '2Y->0', '2Y->X', '2Y->2X', '2Y->3X', '2Y->2X+Y']
    G += grid(['2X->3X; X+Y->2Y', '2X->3X; X+Y->3Y'], ['Y->0', '2Y->0'], g3c,
              [['-'] * 5 + [''] + ['-'] * 15 + ['0'] + ['-'] * 4,
               ['0', '+', '+', '+', '', '0', '+', '', '', '', '', '-', '-', '-', '0', '+'] + [''] * 10], 3)
    G += grid(['2X->3X; X+Y->X'], ['X->0', 'X->Y', 'X->2Y', 'X->3Y'], ['Y->X+2Y'], [['0'], ['+'], ['+'], ['+']], 4)
    g56 = ['0->Y', '0->X+2Y', '0->X+Y', '0->2X+Y', 'Y->X+2Y']
    G += grid(['2X->3X; X+Y->2X'], ['X->0'], g56, [['0', '+', '+', '+', '-']], 5)
    G += grid(['2X->3X; X+Y->3X'], ['X->0'], g56, [['0', 'B', '+', '+', '-']], 6)
    G += grid(['2X->3X; Y->X', '2X->3X; Y->2X', '2X->3X; Y->3X'], ['X+Y->2Y', 'X+Y->3Y', 'X+Y->X+2Y'],
              ['X+Y->X', 'X+Y->0', 'X+Y->Y'], [['-', '-', '-'], ['-', '-', '-'], ['', '-', '-']], 7)
    names = {"-": "Supercritical", "+": "Subcritical", "0": "Vertical", "M": "Mixed", "B": "Bautin"}
    return [{"text": g["text"], "group": g["group"], "verdict": names[g["mark"]]} for g in G]


BT_ROWS = [
    ("X+Y->2Y", "Y->0", "0->Y"), ("X+Y->3Y", "Y->0", "0->Y"), ("X+Y->2Y", "Y->0", "X->Y"),
    ("X+Y->3Y", "Y->0", "X->Y"), ("X+Y->2Y", "Y->0", "X->2Y"), ("X+Y->3Y", "Y->0", "X->2Y"),
    ("X+Y->2Y", "Y->0", "X->3Y"), ("X+Y->3Y", "Y->0", "X->3Y"),
    ("X+Y->2X", "0->Y", "X->0"), ("X+Y->3X", "0->Y", "X->0"),
    ("X+Y->2X", "0->X+2Y", "X->0"), ("X+Y->3X", "0->X+2Y", "X->0"), ("X+Y->2X", "0->X+Y", "X->0"),
    ("X+Y->3X", "0->X+Y", "X->0"), ("X+Y->2X", "0->2X+Y", "X->0"), ("X+Y->3X", "0->2X+Y", "X->0"),
    ("X+Y->X", "Y->X+2Y", "X->Y"), ("X+Y->X", "Y->X+2Y", "X->2Y"), ("X+Y->X", "Y->X+2Y", "X->3Y"),
    ("X+Y->0", "Y->2X", "X->2Y"), ("X+Y->0", "Y->3X", "X->2Y"), ("X+Y->0", "Y->X", "X->3Y"),
    ("X+Y->0", "Y->2X", "X->3Y"), ("X+Y->0", "Y->3X", "X->3Y"), ("X+Y->0", "Y->X", "X->X+Y"),
    ("X+Y->0", "Y->2X", "X->X+Y"), ("X+Y->0", "Y->3X", "X->X+Y"),
    ("X+Y->Y", "2Y->0", "X->2X+Y"), ("X+Y->Y", "2Y->X", "X->2X+Y"), ("X+Y->Y", "2Y->2X", "X->2X+Y"),
    ("X+Y->Y", "2Y->3X", "X->2X+Y"), ("X+Y->Y", "2Y->2X+Y", "X->2X+Y"), ("X+Y->2Y", "2Y->0", "0->X+2Y"),
]

NO_BT = [("X+Y->2Y", "2Y->2X"), ("X+Y->2Y", "2Y->3X"), ("X+Y->2Y", "2Y->2X+Y"), ("X+Y->3Y", "2Y->X"),
         ("X+Y->3Y", "2Y->2X"), ("X+Y->3Y", "2Y->3X"), ("X+Y->3Y", "2Y->2X+Y")]

VERTICAL_HOPF = [
    ("X+Y->0", "2X->Y", "X->2X", "k1 = k2 + 2 k3", "k2 < k3"),
    ("X+Y->0", "2X->2Y", "X->2X", "k1 = k2 + 2 k3", "k2 < 2 k3"),
    ("X+Y->0", "2X->3Y", "X->2X", "k1 = k2 + 2 k3", "k2 < 3 k3"),
    ("X+Y->0", "2X->X+2Y", "X->2X", "k1 = k2 + k3", "k2 < 2 k3"),
    ("X+Y->0", "2X->2X+Y", "X->2X", "k1 = k2", "k2 < k3"),
    ("X+Y->Y", "X->2X+Y", "Y->0", "k1 (k3 + k4) = k2 k3", ""),
    ("X+Y->Y", "X->2X+Y", "Y->X", "2 k1 = k2, k3 = k4", ""),
    ("X+Y->Y", "X->2X+Y", "Y->2X", "2 k1 = k2, k3 = k4", ""),
    ("X+Y->Y", "X->2X+Y", "Y->3X", "2 k1 = k2, k3 = k4", ""),
    ("X+Y->2Y", "2Y->0", "Y->0", "k2 = 2 k3", "k1 < k2"),
    ("X+Y->3Y", "2Y->0", "Y->0", "k2 = 2 k3", "k1 < 2 k2"),
    ("X+Y->2Y", "2Y->0", "X->2X", "k1 = k2", "2 k3 < k2"),
    ("X+Y->3Y", "2Y->0", "X->2X", "k1 = 2 k2", "2 k3 < k2"),
    ("X+Y->2Y", "2Y->0", "0->X", "4 k1 k3 = k2 (k2 + 2 k3)", "k2 < k1"),
    ("X+Y->3Y", "2Y->0", "0->X", "2 k1 k3 = k2 (k2 + 2 k3)", "2 k2 < k1"),
    ("X+Y->2Y", "2Y->0", "Y->X+Y", "4 k1 k3 = k2 (k2 + 2 k3)", "2 k3 < k2"),
    ("X+Y->3Y", "2Y->0", "Y->X+Y", "2 k1 k3 = k2 (k2 + 2 k3)", "2 k3 < k2"),
    ("X+Y->X", "X->0", "Y->X+2Y", "2 k1 k4 = k2 k3", ""),
    ("X+Y->2X", "X->0", "0->Y", "k1 = k2", "4 k1 k4 < k3^2"),
    ("X+Y->3X", "X->0", "0->Y", "k1 = k2", "8 k1 k4 < k3^2"),
]


def main():
    m = {
        "schema_version": 1,
        "networks": {
            "wilhelm": "Y->2X; 2X->X+Y; X+Y->Y; X->0",
            "frank_kamenetsky_salnikov": "2X->3X; X+Y->2Y; Y->0; 0->Y; X->2X",
            "bautin": "2X->3X; X+Y->3X; X->0; 0->X+2Y",
            "bt9": "2X->3X; X+Y->2X; X->0; 0->Y",
            "three_equilibria": "X+Y->X; X->0; 0->5X+Y; 2Y->X+4Y",
            "recoordinatisation_example": "2X->3X; X+Y->2Y; Y->0; 0->Y",
            "generalised_lva_b2": "2X->3X; X+Y->2Y; Y->0",
        },
        "recoordinatisation_example": {
            "Gbar": [[1, -1, 1, -1], [0, 0, 1, -1], [1, -2, 2, 0], [-1, 2, -2, 1]],
            "U": [[2], [2], [1], [1]],
            "X": [1, -1, 1, -1], "Y": [0, 0, 1, -1],
            "alpha1": [2, -3, 3, -1], "alpha2": [1, -2, 3, -1], "alpha3": [-1, 2, -2, 1],
        },
        "fold_bimolecular": fold_bimolecular(),
        "bt_table": [{"row": i + 1, "text": "2X->3X; " + "; ".join(r),
                      "verdict": "Supercritical" if i < 8 else ("Vertical" if i < 10 else "Subcritical")}
                     for i, r in enumerate(BT_ROWS)],
        "bt_diagonal_pairs": [[1, 2], [3, 6], [9, 10], [11, 14], [13, 16]],
        "no_bt": ["2X->3X; " + a + "; Y->0; " + b for a, b in NO_BT],
        "no_bt_diagonal_pairs": [[1, 4], [3, 5]],
        "hopf_table": hopf_table(),
        "vertical_hopf": [{"row": i + 1, "text": "2X->3X; " + "; ".join(r[:3]), "condition": r[3],
                           "inequality": r[4]} for i, r in enumerate(VERTICAL_HOPF)],
        "fold_e6_inheritors": {"patterns": ["0->C; C->X; X->0; 2X->3X", "0->C; C->2X; X->0; 2X->3X",
                                            "0->C; C->3X; X->0; 2X->3X", "0->X; X->C; C->0; 2X->3X",
                                            "0->X; X->0; 2X->C; C->3X"],
                               "C": ["Y", "2Y", "X+Y"]},
        "targets": {
            "lemma-5897": {"spec": "fold-trimolecular", "expected": {"classes": 5897, "with_equilibrium": 5864, "raw_matches_closed_form": 1}},
            "theorem-834": {"spec": "fold-trimolecular", "expected": {
                "zero-eigenvalue": 834, "nondegenerate-fold": 831, "nilpotent-only": 3, "eig2-minus": 825,
                "eig2-plus": 39, "both": 33, "vertical-fold": 33, "vertical-continuum": 33}},
            "theorem-30": {"spec": "fold-bimolecular", "expected": {
                "classes": 838, "with_equilibrium": 829, "fold": 30, "eig2-minus-only": 30, "table-rows-matched": 30,
                "bistable": 10, "orange-matched": 10, "wilhelm-bistable": 1}},
            "table-hopf": {"spec": "hopf", "expected": {
                "base": 946, "total": 198, "super": 135, "sub": 42, "vertical": 17, "mixed": 3,
                "bautin": 1, "table-rows-matched": 198, "bautin-L2-positive": 1, "vertical-table-matched": 20}},
            "table-bt": {"spec": "fold-trimolecular+hopf", "expected": {
                "candidates": 40, "double-zero": 33, "super": 8, "vertical": 2, "sub": 23, "transversal": 31,
                "table-rows-matched": 33, "no-bt": 7, "no-bt-matched": 7}},
            "diagonal-classes": {"spec": "fold-trimolecular+hopf", "expected": {
                "fold": 639, "hopf": 157, "bt": 28, "bt-pairs-matched": 5, "no-bt": 5}},
            "inheritance": {"spec": "fold-trimolecular", "expected": {
                "inheritors": 15, "atoms": 816, "fks-e1": 1, "bt13-14-e6": 2, "e6-list-matched": 15}},
            "recoordinatisation": {"spec": "none", "expected": {"exponents-matched": 1, "identity-random-U": 20}},
            "network-9": {"spec": "none", "expected": {"transitions-matched": 9, "dulac-identity": 1,
                                                       "hamiltonian-drift-ok": 1}},
        },
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(m, indent=1, sort_keys=False) + "\n")
    print(OUT, len(m["hopf_table"]), len(m["bt_table"]), len(m["fold_bimolecular"]))


if __name__ == "__main__":
    main()
