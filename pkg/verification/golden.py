"""
Reference values for the per-quiver verification suite.

D-series values are closed forms in n where D_{n+1} has rank parameter n.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from quiver.dynkin import DynkinQuiver

E_M_ALPHA = {
    6: [[-8, -4], [-4, -8]],
    7: [],
    8: [],
}

E_M_BETA = {
    6: [[0, -6],
        [6, 0]],
    7: [[0, 9, 0, 9, 0, 9],
        [-9, 0, 0, 0, 0, 0],
        [0, 0, 0, 9, 0, 9],
        [-9, 0, -9, 0, 0, 0],
        [0, 0, 0, 0, 0, -9],
        [-9, 0, -9, 0, 9, 0]],
    8: [[0, 15, 0, 15, 0, 0, 0, -15],
        [-15, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 15, 0, 0, 0, -15],
        [-15, 0, -15, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, -15],
        [0, 0, 0, 0, 0, 0, -15, 0],
        [0, 0, 0, 0, 0, 15, 0, -15],
        [15, 0, 15, 0, 15, 0, 15, 0]],
}

E7_KAPPA = [
    [12, 6, 9, 3, 0, 3, -9],
    [-6, 0, 3, 0, 0, 0, -3],
    [15, -3, 12, 3, 0, 3, -12],
    [-3, 0, -3, 0, 0, 0, -6],
    [0, 0, 0, 0, 0, -9, 0],
    [-3, 0, -3, 0, 9, 0, -6],
    [-15, 3, -12, 6, 0, 6, 12],
]

# HH^2 = ker H_A(1) as f<i> = [e_i - e_{nu i}]
E_HH2 = {6: ["f1", "f2"], 7: [], 8: []}

# H_A(t) columns: HILBERT_COLUMNS[selector][j][i - 1] is H_ij
HILBERT_COLUMNS: Dict[str, Dict[int, List[str]]] = {
    "e6": {
        1: ["1+t^6",
            "t+t^5+t^7",
            "t^2+t^4+t^6+t^8",
            "t^3+t^5+t^9",
            "t^4+t^10",
            "t^3+t^7"],
        2: ["t+t^5+t^7",
            "1+t^2+t^4+2t^6+t^8",
            "t+2t^3+2t^5+2t^7+t^9",
            "t^2+2t^4+t^6+t^8+t^10",
            "t^3+t^5+t^9",
            "t^2+t^4+t^6+t^8"],
        3: ["t^2+t^4+t^6+t^8",
            "t+2t^3+2t^5+2t^7+t^9",
            "1+2t^2+3t^4+3t^6+2t^8+t^10",
            "t+2t^3+2t^5+2t^7+t^9",
            "t^2+t^4+t^6+t^8",
            "t+t^3+2t^5+t^7+t^9"],
        4: ["t^3+t^5+t^9",
            "t^2+2t^4+t^6+t^8+t^10",
            "t+2t^3+2t^5+2t^7+t^9",
            "1+t^2+t^4+2t^6+t^8",
            "t+t^5+t^7",
            "t^2+t^4+t^6+t^8"],
        5: ["t^4+t^10",
            "t^3+t^5+t^9",
            "t^2+t^4+t^6+t^8",
            "t+t^5+t^7",
            "1+t^6",
            "t^3+t^7"],
        6: ["t^3+t^7",
            "t^2+t^4+t^6+t^8",
            "t+t^3+2t^5+t^7+t^9",
            "t^2+t^4+t^6+t^8",
            "t^3+t^7",
            "1+t^4+t^6+t^10"],
    },
    "e7": {
        1: ["1+t^8+t^16",
            "t+t^7+t^9+t^15",
            "t^2+t^6+t^8+t^10+t^14",
            "t^3+t^5+t^7+t^9+t^11+t^13",
            "t^4+t^6+t^10+t^12",
            "t^5+t^11",
            "t^4+t^8+t^12"],
        2: ["t+t^7+t^9+t^15",
            "1+t^2+t^6+2t^8+t^10+t^14+t^16",
            "t+t^3+t^5+2t^7+2t^9+t^11+t^13+t^15",
            "t^2+2t^4+2t^6+2t^8+2t^10+2t^12+t^14",
            "t^3+2t^5+t^7+t^9+2t^11+t^13",
            "t^4+t^6+t^10+t^12",
            "t^3+t^5+t^7+t^9+t^11+t^13"],
        3: ["t^2+t^6+t^8+t^10+t^14",
            "t+t^3+t^5+2t^7+2t^9+t^11+t^13+t^15",
            "1+t^2+2t^4+2t^6+3t^8+2t^10+2t^12+t^14+t^16",
            "t+2t^3+3t^5+3t^7+3t^9+3t^11+2t^13+t^15",
            "t^2+2t^4+2t^6+2t^8+2t^10+2t^12+t^14",
            "t^3+t^5+t^7+t^9+t^11+t^13",
            "t^2+t^4+2t^6+t^8+2t^10+t^12+t^14"],
        4: ["t^3+t^5+t^7+t^9+t^11+t^13",
            "t^2+2t^4+2t^6+2t^8+2t^10+2t^12+t^14",
            "t+2t^3+3t^5+3t^7+3t^9+3t^11+2t^13+t^15",
            "1+2t^2+3t^4+4t^6+4t^8+4t^10+3t^12+2t^14+t^16",
            "t+2t^3+2t^5+3t^7+3t^9+2t^11+2t^13+t^15",
            "t^2+t^4+t^6+2t^8+t^10+t^12+t^14",
            "t+t^3+2t^5+2t^7+2t^9+2t^11+t^13+t^15"],
        5: ["t^4+t^6+t^10+t^12",
            "t^3+2t^5+t^7+t^9+2t^11+t^13",
            "t^2+2t^4+2t^6+2t^8+2t^10+2t^12+t^14",
            "t+2t^3+2t^5+3t^7+3t^9+2t^11+2t^13+t^15",
            "1+t^2+t^4+2t^6+2t^8+2t^10+t^12+t^14+t^16",
            "t+t^5+t^7+t^9+t^11+t^15",
            "t^2+t^4+t^6+2t^8+t^10+t^12+t^14"],
        6: ["t^5+t^11",
            "t^4+t^6+t^10+t^12",
            "t^3+t^5+t^7+t^9+t^11+t^13",
            "t^2+t^4+t^6+2t^8+t^10+t^12+t^14",
            "t+t^5+t^7+t^9+t^11+t^15",
            "1+t^6+t^10+t^16",
            "t^3+t^7+t^9+t^13"],
        7: ["t^4+t^8+t^12",
            "t^3+t^5+t^7+t^9+t^11+t^13",
            "t^2+t^4+2t^6+t^8+2t^10+t^12+t^14",
            "t+t^3+2t^5+2t^7+2t^9+2t^11+t^13+t^15",
            "t^2+t^4+t^6+2t^8+t^10+t^12+t^14",
            "t^3+t^7+t^9+t^13",
            "1+t^4+t^6+t^8+t^10+t^12+t^16"],
    },
    "e8": {
        1: ["1+t^10+t^18+t^28",
            "t+t^9+t^11+t^17+t^19+t^27",
            "t^2+t^8+t^10+t^12+t^16+t^18+t^20+t^26",
            "t^3+t^7+t^9+t^11+t^13+t^15+t^17+t^19+t^21+t^25",
            "t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24",
            "t^5+t^7+t^11+t^13+t^15+t^17+t^21+t^23",
            "t^6+t^12+t^16+t^22",
            "t^5+t^9+t^13+t^15+t^19+t^23"],
        2: ["t+t^9+t^11+t^17+t^19+t^27",
            "1+t^2+t^8+2t^10+t^12+t^16+2t^18+t^20+t^26+t^28",
            "t+t^3+t^7+2t^9+2t^11+t^13+t^15+2t^17+2t^19+t^21+t^25+t^27",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26",
            "t^3+2t^5+2t^7+2t^9+2t^11+3t^13+3t^15+2t^17+2t^19+2t^21+2t^23+t^25",
            "t^4+2t^6+t^8+t^10+2t^12+2t^14+2t^16+t^18+t^20+2t^22+t^24",
            "t^5+t^7+t^11+t^13+t^15+t^17+t^21+t^23",
            "t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24"],
        3: ["t^2+t^8+t^10+t^12+t^16+t^18+t^20+t^26",
            "t+t^3+t^7+2t^9+2t^11+t^13+t^15+2t^17+2t^19+t^21+t^25+t^27",
            "1+t^2+t^4+t^6+2t^8+3t^10+2t^12+2t^14+2t^16+3t^18+2t^20+t^22+t^24+t^26+t^28",
            "t+t^3+2t^5+2t^7+3t^9+3t^11+3t^13+3t^15+3t^17+3t^19+2t^21+2t^23+t^25+t^27",
            "t^2+2t^4+3t^6+3t^8+3t^10+4t^12+4t^14+4t^16+3t^18+3t^20+3t^22+2t^24+t^26",
            "t^3+2t^5+2t^7+2t^9+2t^11+3t^13+3t^15+2t^17+2t^19+2t^21+2t^23+t^25",
            "t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24",
            "t^3+t^5+2t^7+t^9+2t^11+2t^13+2t^15+2t^17+t^19+2t^21+t^23+t^25"],
        4: ["t^3+t^7+t^9+t^11+t^13+t^15+t^17+t^19+t^21+t^25",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26",
            "t+t^3+2t^5+2t^7+3t^9+3t^11+3t^13+3t^15+3t^17+3t^19+2t^21+2t^23+t^25+t^27",
            "1+t^2+2t^4+3t^6+3t^8+4t^10+4t^12+4t^14+4t^16+4t^18+3t^20+3t^22+2t^24+t^26+t^28",
            "t+2t^3+3t^5+4t^7+4t^9+5t^11+5t^13+5t^15+5t^17+4t^19+4t^21+3t^23+2t^25+t^27",
            "t^2+2t^4+2t^6+3t^8+3t^10+3t^12+4t^14+3t^16+3t^18+3t^20+2t^22+2t^24+t^26",
            "t^3+t^5+t^7+2t^9+t^11+2t^13+2t^15+t^17+2t^19+t^21+t^23+t^25",
            "t^2+t^4+2t^6+2t^8+2t^10+3t^12+2t^14+3t^16+2t^18+2t^20+2t^22+t^24+t^26"],
        5: ["t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24",
            "t^3+2t^5+2t^7+2t^9+2t^11+3t^13+3t^15+2t^17+2t^19+2t^21+2t^23+t^25",
            "t^2+2t^4+3t^6+3t^8+3t^10+4t^12+4t^14+4t^16+3t^18+3t^20+3t^22+2t^24+t^26",
            "t+2t^3+3t^5+4t^7+4t^9+5t^11+5t^13+5t^15+5t^17+4t^19+4t^21+3t^23+2t^25+t^27",
            "1+2t^2+3t^4+4t^6+5t^8+6t^10+6t^12+6t^14+6t^16+6t^18+5t^20+4t^22+3t^24+2t^26+t^28",
            "t+2t^3+2t^5+3t^7+4t^9+4t^11+4t^13+4t^15+4t^17+4t^19+3t^21+2t^23+2t^25+t^27",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26",
            "t+t^3+2t^5+2t^7+3t^9+3t^11+3t^13+3t^15+3t^17+3t^19+2t^21+2t^23+t^25+t^27"],
        6: ["t^5+t^7+t^11+t^13+t^15+t^17+t^21+t^23",
            "t^4+2t^6+t^8+t^10+2t^12+2t^14+2t^16+t^18+t^20+2t^22+t^24",
            "t^3+2t^5+2t^7+2t^9+2t^11+3t^13+3t^15+2t^17+2t^19+2t^21+2t^23+t^25",
            "t^2+2t^4+2t^6+3t^8+3t^10+3t^12+4t^14+3t^16+3t^18+3t^20+2t^22+2t^24+t^26",
            "t+2t^3+2t^5+3t^7+4t^9+4t^11+4t^13+4t^15+4t^17+4t^19+3t^21+2t^23+2t^25+t^27",
            "1+t^2+t^4+2t^6+2t^8+3t^10+3t^12+2t^14+3t^16+3t^18+2t^20+2t^22+t^24+t^26+t^28",
            "t+t^5+t^7+t^9+2t^11+t^13+t^15+2t^17+t^19+t^21+t^23+t^27",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26"],
        7: ["t^6+t^12+t^16+t^22",
            "t^5+t^7+t^11+t^13+t^15+t^17+t^21+t^23",
            "t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24",
            "t^3+t^5+t^7+2t^9+t^11+2t^13+2t^15+t^17+2t^19+t^21+t^23+t^25",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26",
            "t+t^5+t^7+t^9+2t^11+t^13+t^15+2t^17+t^19+t^21+t^23+t^27",
            "1+t^6+t^10+t^12+t^16+t^18+t^22+t^28",
            "t^3+t^7+t^9+t^11+t^13+t^15+t^17+t^19+t^21+t^25"],
        8: ["t^5+t^9+t^13+t^15+t^19+t^23",
            "t^4+t^6+t^8+t^10+t^12+2t^14+t^16+t^18+t^20+t^22+t^24",
            "t^3+t^5+2t^7+t^9+2t^11+2t^13+2t^15+2t^17+t^19+2t^21+t^23+t^25",
            "t^2+t^4+2t^6+2t^8+2t^10+3t^12+2t^14+3t^16+2t^18+2t^20+2t^22+t^24+t^26",
            "t+t^3+2t^5+2t^7+3t^9+3t^11+3t^13+3t^15+3t^17+3t^19+2t^21+2t^23+t^25+t^27",
            "t^2+t^4+t^6+2t^8+2t^10+2t^12+2t^14+2t^16+2t^18+2t^20+t^22+t^24+t^26",
            "t^3+t^7+t^9+t^11+t^13+t^15+t^17+t^19+t^21+t^25",
            "1+t^4+t^6+t^8+2t^10+t^12+2t^14+t^16+2t^18+t^20+t^22+t^24+t^28"],
    },
}


def hilbert_entry(selector: str, i: int, j: int) -> Dict[int, int]:
    """H_ij of an E quiver as {exponent: coefficient}, e.g. "2t^6" -> {6: 2}."""
    terms = {}
    for term in HILBERT_COLUMNS[selector][j][i - 1].split("+"):
        if "t" not in term:
            terms[0] = int(term)
            continue
        coeff, _, power = term.partition("t")
        terms[int(power[1:]) if power else 1] = int(coeff or 1)
    return terms


def d_block_dimension(n: int, k: int, j: int) -> int:
    """
    dim e_k A e_j for D_{n+1}, counted from the monomial basis of each block.

    Vertices n and n+1 are the two short legs attached to n-1.
    """
    if k <= n - 1 and j <= n - 1:
        if k <= j:
            return min(k - 1, n - j - 1) + 1 + k + max(0, k + j - n)
        return min(n - k - 1, j - 1) + 1 + j + max(0, j + k - n)
    if k <= n - 1:
        return k
    if j <= n - 1:
        return j
    if k == j:
        return (n + 1) // 2
    return (n - 1) // 2 if n % 2 else n // 2

# products of generators in the center, as (left, right) -> {name: coeff}
CENTER_PRODUCTS_E = {
    6: {},
    7: {("z8", "z8"): {"w1": 1, "w3": 1, "w7": -1}},
    8: {("z12", "z12"): {"z24": 1}},
}


def m_alpha(quiver: DynkinQuiver) -> List[List[int]]:
    if quiver.family == "E":
        return E_M_ALPHA[quiver.rank_param]
    n = quiver.rank_param
    return [[-n]] if n % 2 == 0 else []


def m_beta(quiver: DynkinQuiver) -> List[List[int]]:
    """
    M_beta over I' in the basis eps_i and its dual phi0(w_i).

    For D_{n+1}: theta_0 eps_j = -n sum_{even i < j} phi0(w_i) for odd j < n
    and for j = n; for even j it is n times the sum over odd i > j
    (i <= n - 2 when n is odd, plus i = n; i <= n - 1 when n is even).
    """
    if quiver.family == "E":
        return E_M_BETA[quiver.rank_param]
    n = quiver.rank_param
    indices = list(range(2, n + 1)) if n % 2 else list(range(2, n))
    position = {v: p for p, v in enumerate(indices)}
    matrix = [[0] * len(indices) for _ in indices]
    for j in indices:
        if j % 2 or j == n:
            rows = [i for i in indices if i % 2 == 0 and i < j]
            value = -n
        else:
            top = n - 2 if n % 2 else n - 1
            rows = [i for i in indices if i % 2 and j < i <= top]
            if n % 2:
                rows.append(n)
            value = n
        for i in rows:
            matrix[position[i]][position[j]] = value
    return matrix


def hh2_names(quiver: DynkinQuiver) -> List[str]:
    if quiver.family == "E":
        return E_HH2[quiver.rank_param]
    n = quiver.rank_param
    return [f"f{n}"] if n % 2 == 0 else []


def center_products(quiver: DynkinQuiver) -> Optional[Dict]:
    """Expected nonzero products among the z-generators below the top degree."""
    if quiver.family == "E":
        return CENTER_PRODUCTS_E[quiver.rank_param]
    n = quiver.rank_param
    count = n // 2
    products = {}
    for j in range(1, count):
        for k in range(j, count):
            if j + k < count:
                products[(f"z{4 * j}", f"z{4 * k}")] = {f"z{4 * (j + k)}": 1}
    return products


E7_ETA = [
    [3, 0, 3, 0, 0, 0, -3],
    [0, 0, 0, 0, 0, 0, 0],
    [3, 0, 3, 0, 0, 0, -3],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [-3, 0, -3, 0, 0, 0, 3],
]


def eta_matrix(quiver: DynkinQuiver) -> List[List[Fraction]]:
    """
    H^eta over the nu-fixed vertices in increasing order.

    Zero for E6 and E8, where ker H^eta is all of R_F.
    """
    if quiver.family == "E":
        if quiver.rank_param == 7:
            return [[Fraction(v) for v in row] for row in E7_ETA]
        size = 2 if quiver.rank_param == 6 else 8
        return [[Fraction(0)] * size for _ in range(size)]
    n = quiver.rank_param
    if n % 2 == 0:
        return [[Fraction(2 if k % 2 and j % 2 else 0) for j in range(1, n)] for k in range(1, n)]
    matrix = []
    for k in range(1, n + 2):
        row = []
        for j in range(1, n + 2):
            if k < n and j < n:
                value = 2 if k % 2 and j % 2 else 0
            elif k < n:
                value = k % 2
            elif j < n:
                value = j % 2
            else:
                value = Fraction(n + 1, 2) if k == j else -Fraction(n - 1, 2)
            row.append(Fraction(value))
        matrix.append(row)
    return matrix
