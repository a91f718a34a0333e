// Copyright 2026 The tnqpi Authors
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tnqpi/tensor_train.hpp"
#include "tnqpi/unitary_mpo.hpp"

namespace tnqpi {

/// Binary container, little-endian:
///   magic "TNQPITT\0" | u32 version | u8 kind (0 vector, 1 operator)
///   | u8 scalar (0 float64, 1 complex128) | u16 reserved | u64 n
///   | u64 ranks[n + 1] | per core: row-major scalars (complex as re, im)
inline constexpr std::uint32_t kTTFormatVersion = 1;
/// magic "TNQPIUM\0" | u32 version | u64 n | u64 R | f64 c
///   | per gate: (2R)^2 complex128, row-major
inline constexpr std::uint32_t kUnitaryMPOFormatVersion = 1;

template <typename TT>
void write_tt(std::ostream& out, const TT& tt);
template <typename TT>
TT read_tt(std::istream& in);

void write_unitary_mpo(std::ostream& out, const UnitaryMPO& u);
UnitaryMPO read_unitary_mpo(std::istream& in);

template <typename TT>
std::string encode_tt(const TT& tt);
template <typename TT>
TT decode_tt(const std::string& bytes);

std::string encode_unitary_mpo(const UnitaryMPO& u);
UnitaryMPO decode_unitary_mpo(const std::string& bytes);

/// Writes to a sibling temporary file, then renames over `path`.
/// Throws kIo when the parent directory does not exist.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace tnqpi
