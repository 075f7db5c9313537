// Data-only header: the embedded default catalog and the expectation data for
// table verification. Known discrepancies live here, not in code, so errata
// change data only.
#pragma once

namespace orbik3 {

inline constexpr const char* kDefaultCatalogJson = R"JSON(
{
  "bases": [
    { "id": "X30", "weights": [5, 6, 8, 11], "degree": 30 },
    { "id": "X36", "weights": [7, 8, 9, 12], "degree": 36 },
    { "id": "X50", "weights": [7, 8, 10, 25], "degree": 50 }
  ],
  "surfaces": [
    { "id": "Xt1",  "base": "X30", "chain": [1],
      "expected": { "singularities": [10, 7], "euler": 7, "budget": "211/88" } },
    { "id": "Xt2",  "base": "X36", "chain": [3],
      "expected": { "singularities": [7, 6, 2, 1], "euler": 8,
                    "q_tuple": [14, 11, 28], "budget": "17/168" } },
    { "id": "Xt3",  "base": "X50", "chain": [1, 4],
      "expected": { "singularities": [7, 6, 2], "euler": 9,
                    "q_tuple": [5, 3, 2, 7], "budget": "269/168" } },
    { "id": "Xt4",  "base": "X36", "chain": [3, 2],
      "expected": { "singularities": [7, 6, 1], "euler": 10,
                    "q_tuple": [6, 2, 10, 6, 9], "budget": "155/56" } },
    { "id": "Xt5",  "base": "X50", "chain": [1, 4, 2],
      "expected": { "singularities": [7, 6], "euler": 11,
                    "q_tuple": [5, 2, 1, 4, 2, 6], "budget": "239/56" } },
    { "id": "Xt6",  "base": "X36", "chain": [3, 2, 6],
      "expected": { "singularities": [7, 4, 1], "euler": 12,
                    "q_tuple": [5, 1, 5, 2, 11, 1, 3], "budget": "139/40" } },
    { "id": "Xt7",  "base": "X50", "chain": [1, 4, 2, 6],
      "expected": { "singularities": [7, 4], "euler": 13,
                    "q_tuple": [5, 2, 1, 4, 1, 4, 1, 5], "budget": "253/40" } },
    { "id": "Xt8",  "base": "X36", "chain": [3, 2, 6, 4],
      "expected": { "singularities": [7, 2, 1], "euler": 14,
                    "q_tuple": [5, 3, 7, 1, 6, 1, 3, 1, 3], "budget": "57/8" } },
    { "id": "Xt9",  "base": "X50", "chain": [1, 4, 2, 6, 4],
      "expected": { "singularities": [7, 2], "euler": 15,
                    "q_tuple": [6, 2, 1, 4, 2, 6, 1, 5, 1, 3], "budget": "203/24" } },
    { "id": "Xt10", "base": "X36", "chain": [3, 2, 6, 4, 2],
      "expected": { "singularities": [7, 1], "euler": 16,
                    "q_tuple": [5, 1, 6, 3, 8, 1, 3, 1, 3, 1, 3], "budget": "77/8" } },
    { "id": "Xt11", "base": "X50", "chain": [1, 4, 2, 6, 4, 2],
      "expected": { "singularities": [7], "euler": 17,
                    "q_tuple": [6, 2, 1, 4, 2, 5, 1, 5, 1, 3, 1, 3], "budget": "89/8" } },
    { "id": "Xt12", "base": "X36", "chain": [3, 2, 6, 4, 2, 7],
      "expected": { "singularities": [5, 1], "euler": 18,
                    "q_tuple": [5, 1, 4, 1, 8, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "35/3" } },
    { "id": "Xt13", "base": "X50", "chain": [1, 4, 2, 6, 4, 2, 7],
      "expected": { "singularities": [5], "euler": 19,
                    "q_tuple": [8, 2, 1, 4, 1, 12, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "79/6" } },
    { "id": "Xt14", "base": "X36", "chain": [3, 2, 6, 4, 2, 7, 5],
      "expected": { "singularities": [3, 1], "euler": 20,
                    "q_tuple": [5, 1, 5, 1, 5, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "55/4" } },
    { "id": "Xt15", "base": "X50", "chain": [1, 4, 2, 6, 4, 2, 7, 5],
      "expected": { "singularities": [3], "euler": 21,
                    "q_tuple": [8, 3, 1, 5, 3, 6, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "61/4" } },
    { "id": "Xt16", "base": "X36", "chain": [3, 2, 6, 4, 2, 7, 5, 3],
      "expected": { "singularities": [1, 1], "euler": 22,
                    "q_tuple": [6, 1, 5, 4, 8, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "16" } },
    { "id": "Xt17", "base": "X50", "chain": [1, 4, 2, 6, 4, 2, 7, 5, 3],
      "expected": { "singularities": [1], "euler": 23,
                    "q_tuple": [7, 2, 1, 5, 1, 4, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3, 1, 3], "budget": "35/2" } }
  ],
  "known_discrepancies": {
    "q_square": { "Xt5": "70" },
    "orbifold_remark": {
      "q_dot_hbar": { "stated": "19/88", "computed": "5/11" },
      "q_dot_exceptional": { "stated": "18", "computed": "6" }
    },
    "notes": {
      "Xt15": "tuple printed with irregular spacing; recorded as the normalized 16-entry reading"
    }
  }
}
)JSON";

} // namespace orbik3
