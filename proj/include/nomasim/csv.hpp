// SPDX-License-Identifier: Apache-2.0
//
// noma-sim: link-level simulation library for power-domain NOMA
// Copyright (C) 2026 the noma-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NOMASIM_CSV_HPP
#define NOMASIM_CSV_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nomasim
{

// Locale-independent shortest-faithful formatting ('.' decimal point always).
std::string format_double(double value, int significant_digits);

// Significant digits used for exact closed-form values and for Monte Carlo
// estimates respectively.
inline constexpr int k_csv_exact_digits = 17;
inline constexpr int k_csv_mc_digits = 6;

/*!
 * In-memory CSV builder: comma separators, one mandatory header row,
 * '\n' line ends. Building in memory keeps output byte-deterministic and
 * lets the runner write the file in one shot.
 */
class CsvBuilder
{
  public:
    explicit CsvBuilder(const std::vector<std::string> &column_names);

    CsvBuilder &add(const std::string &text);
    CsvBuilder &add(double value, int significant_digits);
    CsvBuilder &add(std::uint64_t value);
    CsvBuilder &add_empty();
    void end_row();

    const std::string &str() const;
    std::size_t rows() const { return rows_; }

  private:
    void separator();

    std::string buffer_;
    std::size_t columns_ = 0;
    std::size_t fields_in_row_ = 0;
    std::size_t rows_ = 0;
};

// Writes the text to the path, throwing io_error on failure.
void write_text_file(const std::string &path, const std::string &text);

} // namespace nomasim

#endif
