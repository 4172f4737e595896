// Copyright 2026 The nmgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text serialization of neighbourhood matrices.
//
// Dense:
//   7
//   # labels: 1 2 3 4 5 6 7
//   -2 2 0 0 -2 3 -1
//   ...
// The label comment is omitted for n = 0. Readers skip any '#' line and fall
// back to labels 1..n when no label comment is present.
//
// Matrix Market: "%%MatrixMarket matrix coordinate integer general", a
// "% labels: ..." comment, the "n n nnz" size line, then 1-based "i j v"
// triplets for the non-zero entries in row-major order.

#ifndef NMGRAPH_MATRIX_IO_H_
#define NMGRAPH_MATRIX_IO_H_

#include <istream>
#include <ostream>
#include <string_view>

#include "nmgraph/neighborhood_matrix.h"

namespace nmgraph {

enum class MatrixFormat { kDense, kMatrixMarket };

void WriteDense(const NeighborhoodMatrix& m, std::ostream& out);
void WriteMatrixMarket(const NeighborhoodMatrix& m, std::ostream& out);
void WriteMatrix(const NeighborhoodMatrix& m, MatrixFormat format,
                 std::ostream& out);

// Throw ParseError with a line number on malformed input.
NeighborhoodMatrix ReadDense(std::istream& in);
NeighborhoodMatrix ReadMatrixMarket(std::istream& in);
// Chooses the reader from the first line ("%%MatrixMarket" or not).
NeighborhoodMatrix ReadMatrix(std::istream& in);
NeighborhoodMatrix ReadMatrix(std::string_view text);

}  // namespace nmgraph

#endif  // NMGRAPH_MATRIX_IO_H_
