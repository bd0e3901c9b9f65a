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

#include "nomasim/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "nomasim/common.hpp"

namespace nomasim
{

std::string format_double(double value, int significant_digits)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                                   significant_digits);
    if (res.ec != std::errc{})
        throw std::runtime_error("Number formatting failed.");
    return std::string(buf, res.ptr);
}

CsvBuilder::CsvBuilder(const std::vector<std::string> &column_names) : columns_(column_names.size())
{
    if (columns_ == 0)
        throw std::invalid_argument("CSV needs at least one column.");
    for (std::size_t i = 0; i < column_names.size(); ++i)
    {
        if (i > 0)
            buffer_ += ',';
        buffer_ += column_names[i];
    }
    buffer_ += '\n';
}

void CsvBuilder::separator()
{
    if (fields_in_row_ >= columns_)
        throw std::logic_error("Row has more fields than the header.");
    if (fields_in_row_ > 0)
        buffer_ += ',';
    ++fields_in_row_;
}

CsvBuilder &CsvBuilder::add(const std::string &text)
{
    separator();
    buffer_ += text;
    return *this;
}

CsvBuilder &CsvBuilder::add(double value, int significant_digits)
{
    separator();
    buffer_ += format_double(value, significant_digits);
    return *this;
}

CsvBuilder &CsvBuilder::add(std::uint64_t value)
{
    separator();
    buffer_ += std::to_string(value);
    return *this;
}

CsvBuilder &CsvBuilder::add_empty()
{
    separator();
    return *this;
}

void CsvBuilder::end_row()
{
    if (fields_in_row_ != columns_)
        throw std::logic_error("Row field count does not match the header.");
    buffer_ += '\n';
    fields_in_row_ = 0;
    ++rows_;
}

const std::string &CsvBuilder::str() const
{
    if (fields_in_row_ != 0)
        throw std::logic_error("Unterminated CSV row.");
    return buffer_;
}

void write_text_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("Cannot open '" + path + "' for writing.");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw io_error("Write to '" + path + "' failed.");
}

} // namespace nomasim
