#pragma once

// Edge lists of the named cubic graphs in the built-in catalog, vertices 0..n-1.

#include <array>
#include <cstdint>
#include <utility>

namespace fixity::catalog_data {

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 15> k_petersen_edges{{
    {0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8},
    {6, 9}, {7, 9},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 21> k_heawood_edges{{
    {0, 1}, {0, 5}, {0, 13}, {1, 2}, {1, 10}, {2, 3}, {2, 7}, {3, 4}, {3, 12}, {4, 5}, {4, 9}, {5, 6}, {6, 7},
    {6, 11}, {7, 8}, {8, 9}, {8, 13}, {9, 10}, {10, 11}, {11, 12}, {12, 13},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 27> k_pappus_edges{{
    {0, 1}, {0, 5}, {0, 17}, {1, 2}, {1, 8}, {2, 3}, {2, 13}, {3, 4}, {3, 10}, {4, 5}, {4, 15}, {5, 6},
    {6, 7}, {6, 11}, {7, 8}, {7, 14}, {8, 9}, {9, 10}, {9, 16}, {10, 11}, {11, 12}, {12, 13}, {12, 17},
    {13, 14}, {14, 15}, {15, 16}, {16, 17},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 30> k_dodecahedron_edges{{
    {0, 1}, {0, 10}, {0, 19}, {1, 2}, {1, 8}, {2, 3}, {2, 6}, {3, 4}, {3, 19}, {4, 5}, {4, 17}, {5, 6},
    {5, 15}, {6, 7}, {7, 8}, {7, 14}, {8, 9}, {9, 10}, {9, 13}, {10, 11}, {11, 12}, {11, 18}, {12, 13},
    {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 30> k_desargues_edges{{
    {0, 1}, {0, 5}, {0, 19}, {1, 2}, {1, 16}, {2, 3}, {2, 11}, {3, 4}, {3, 14}, {4, 5}, {4, 9}, {5, 6},
    {6, 7}, {6, 15}, {7, 8}, {7, 18}, {8, 9}, {8, 13}, {9, 10}, {10, 11}, {10, 19}, {11, 12}, {12, 13},
    {12, 17}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 24> k_moebius_kantor_edges{{
    {0, 1}, {0, 5}, {0, 15}, {1, 2}, {1, 12}, {2, 3}, {2, 7}, {3, 4}, {3, 14}, {4, 5}, {4, 9}, {5, 6}, {6, 7},
    {6, 11}, {7, 8}, {8, 9}, {8, 13}, {9, 10}, {10, 11}, {10, 15}, {11, 12}, {12, 13}, {13, 14}, {14, 15},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 36> k_nauru_edges{{
    {0, 1}, {0, 5}, {0, 23}, {1, 2}, {1, 16}, {2, 3}, {2, 9}, {3, 4}, {3, 20}, {4, 5}, {4, 13}, {5, 6},
    {6, 7}, {6, 11}, {7, 8}, {7, 22}, {8, 9}, {8, 15}, {9, 10}, {10, 11}, {10, 19}, {11, 12}, {12, 13},
    {12, 17}, {13, 14}, {14, 15}, {14, 21}, {15, 16}, {16, 17}, {17, 18}, {18, 19}, {18, 23}, {19, 20},
    {20, 21}, {21, 22}, {22, 23},
}};

inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 45> k_tutte_coxeter_edges{{
    {0, 1}, {0, 17}, {0, 29}, {1, 2}, {1, 22}, {2, 3}, {2, 9}, {3, 4}, {3, 26}, {4, 5}, {4, 13}, {5, 6},
    {5, 18}, {6, 7}, {6, 23}, {7, 8}, {7, 28}, {8, 9}, {8, 15}, {9, 10}, {10, 11}, {10, 19}, {11, 12},
    {11, 24}, {12, 13}, {12, 29}, {13, 14}, {14, 15}, {14, 21}, {15, 16}, {16, 17}, {16, 25}, {17, 18},
    {18, 19}, {19, 20}, {20, 21}, {20, 27}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26}, {26, 27},
    {27, 28}, {28, 29},
}};

} // namespace fixity::catalog_data
