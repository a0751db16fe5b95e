#pragma once

// Worked example data: the (4,7) positroid
// and its leftward toggling sequence from the target necklace.

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fixture {

inline const std::vector<int> example_window = {3, 9, 8, 7, 5, 11, 13};

inline const std::vector<std::string> example_target = {"1246", "2346", "2346", "1246",
                                                        "1267", "1267", "1247"};

struct ToggleLine {
    int position;                                // 0 for the starting line
    std::vector<std::string> entries;            // I_7, I_1, ..., I_6
    std::vector<std::pair<int, int>> stacks;     // s_0, ..., s_6 as (x, f(x))
};

inline const std::vector<ToggleLine> toggle_lines = {
    {0, {"7124", "1246", "2346", "3462", "4612", "6712", "6712"},
     {{0, 6}, {1, 3}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {6, 11}}},
    {1, {"7124", "7234", "2346", "3462", "4612", "6712", "6712"},
     {{1, 3}, {0, 6}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {6, 11}}},
    {7, {"6723", "7234", "2346", "3462", "4612", "6712", "6712"},
     {{-1, 4}, {0, 6}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2461", "4612", "6712", "6712"},
     {{-1, 4}, {0, 6}, {3, 8}, {2, 9}, {4, 7}, {5, 5}, {8, 10}}},
    {4, {"6723", "7234", "2346", "2461", "2671", "6712", "6712"},
     {{-1, 4}, {0, 6}, {3, 8}, {4, 7}, {2, 9}, {5, 5}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2367", "2671", "6712", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {3, 8}, {2, 9}, {5, 5}, {8, 10}}},
    {5, {"6723", "7234", "2346", "2367", "2671", "2671", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {3, 8}, {5, 5}, {2, 9}, {8, 10}}},
    {4, {"6723", "7234", "2346", "2367", "2367", "2671", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {5, 5}, {3, 8}, {2, 9}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2346", "2367", "2671", "6712"},
     {{-1, 4}, {0, 6}, {5, 5}, {4, 7}, {3, 8}, {2, 9}, {8, 10}}},
    {2, {"6723", "7234", "7234", "2346", "2367", "2671", "6712"},
     {{-1, 4}, {5, 5}, {7, 13}, {4, 7}, {3, 8}, {2, 9}, {8, 10}}},
};

// braid word of the example, read off its wiring diagram
inline const std::vector<int> example_beta = {3, 2, 1, 3, 3, 2, 1, 3, 2, 3, 3, 2, 1};
// the same word anchored elsewhere (a cyclic rotation)
inline const std::vector<int> example_beta_anchored = {3, 3, 2, 1, 3, 2, 3, 3, 2, 1, 3, 2, 1};

inline std::set<int> digits(const std::string& s) {
    std::set<int> out;
    for (char c : s) out.insert(c - '0');
    return out;
}

}  // namespace fixture
