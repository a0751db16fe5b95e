#pragma once

#include <string>
#include <vector>

#include "plabic_graph.hpp"
#include "positroid_core.hpp"

namespace pw {

// Young diagram in an m x width box, rows top to bottom, filled with +/0.
// labels run along the staircase from the upper right corner to the lower left.
struct LeDiagram {
    int m = 0;
    int width = 0;
    std::vector<std::vector<bool>> plus;  // plus[r][c], row r has plus[r].size() cells
    std::vector<int> labels;              // m + width boundary labels in staircase order

    int n() const { return m + width; }
    int row_length(int r) const { return static_cast<int>(plus[r].size()); }
    int column_length(int c) const;  // c is 0-based
    bool operator==(const LeDiagram& o) const {
        return m == o.m && width == o.width && plus == o.plus && labels == o.labels;
    }
};

struct StairStep {
    bool vertical;  // true: right end of a row, false: bottom of a column
    int index;      // row or column (0-based)
};
std::vector<StairStep> staircase(const LeDiagram& d);
int row_label(const LeDiagram& d, int r);
int column_label(const LeDiagram& d, int c);

// box filled with a shape and a cyclic labelling i, i+1, ..., i-1 of [n]
LeDiagram make_le(int m, int n, int min_index, const std::vector<std::string>& rows);
// header "m n i", then one row of +/0 per line ("-" for an empty row),
// then optionally "labels l1 ... ln" when the labels are not i, i+1, ... of [n]
LeDiagram parse_le(const std::string& text);
std::string to_text(const LeDiagram& d);

bool validate_le(const LeDiagram& d);
PlabicGraph plabic_from_le(const LeDiagram& d);
// boundary labels of d sorted increasingly; graph vertex k carries the k-th of them
std::vector<int> sorted_labels(const LeDiagram& d);

// the eight-step recipe read literally; may return an invalid or wrong diagram
LeDiagram tshift_le_recipe(const LeDiagram& d);
// recipe output checked against f(i-1); on a mismatch, the unique Le diagram of the
// shifted positroid with the same staircase labels
LeDiagram tshift_le(const LeDiagram& d);

std::vector<LeDiagram> all_le_diagrams(int m, int n, int min_index);
LeDiagram le_from_bap(const Bap& f, int min_index = 1);
// random point of the positroid cell of f: boundary measurement of its Le graph,
// moved by a random element of GL_m and of the column torus
Matrix sample_stratum_point(const Bap& f, Rng& rng);

}  // namespace pw
