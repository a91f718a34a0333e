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

#include "tnqpi/serialization.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include "tnqpi/error.hpp"

namespace tnqpi {

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

namespace {

constexpr std::array<char, 8> kTTMagic{'T', 'N', 'Q', 'P', 'I', 'T', 'T', '\0'};
constexpr std::array<char, 8> kUMagic{'T', 'N', 'Q', 'P', 'I', 'U', 'M', '\0'};
constexpr std::uint64_t kMaxRank = 1u << 20;

template <typename V>
void put(std::ostream& out, const V& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(V));
}

template <typename V>
V get(std::istream& in) {
  V v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(V));
  if (!in) throw Error(ErrorCode::kFormat, "truncated tensor file");
  return v;
}

void check_magic(std::istream& in, const std::array<char, 8>& magic) {
  std::array<char, 8> got{};
  in.read(got.data(), got.size());
  if (!in || got != magic) throw Error(ErrorCode::kFormat, "bad file magic");
}

template <typename TT>
struct TTTraits;

template <typename T>
struct TTTraits<BasicTTVector<T>> {
  using Scalar = T;
  using CoreType = Core3<T>;
  static constexpr std::uint8_t kind = 0;
};

template <typename T>
struct TTTraits<BasicTTOperator<T>> {
  using Scalar = T;
  using CoreType = Core4<T>;
  static constexpr std::uint8_t kind = 1;
};

template <typename T>
constexpr std::uint8_t scalar_tag() {
  return std::is_same_v<T, cplx> ? 1 : 0;
}

}  // namespace

template <typename TT>
void write_tt(std::ostream& out, const TT& tt) {
  using Traits = TTTraits<TT>;
  using T = typename Traits::Scalar;
  out.write(kTTMagic.data(), kTTMagic.size());
  put(out, kTTFormatVersion);
  put(out, Traits::kind);
  put(out, scalar_tag<T>());
  put(out, std::uint16_t{0});
  put(out, static_cast<std::uint64_t>(tt.num_qubits()));
  for (const auto r : tt.ranks()) put(out, static_cast<std::uint64_t>(r));
  for (const auto& core : tt.cores()) {
    out.write(reinterpret_cast<const char*>(core.data.data()),
              static_cast<std::streamsize>(core.data.size() * sizeof(T)));
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing tensor train");
}

template <typename TT>
TT read_tt(std::istream& in) {
  using Traits = TTTraits<TT>;
  using T = typename Traits::Scalar;
  using CoreType = typename Traits::CoreType;
  check_magic(in, kTTMagic);
  if (get<std::uint32_t>(in) != kTTFormatVersion) {
    throw Error(ErrorCode::kFormat, "unsupported tensor train version");
  }
  if (get<std::uint8_t>(in) != Traits::kind) {
    throw Error(ErrorCode::kFormat, "tensor train kind mismatch (vector vs operator)");
  }
  if (get<std::uint8_t>(in) != scalar_tag<T>()) {
    throw Error(ErrorCode::kFormat, "tensor train scalar type mismatch");
  }
  get<std::uint16_t>(in);
  const auto n = get<std::uint64_t>(in);
  if (n == 0 || n > 64) throw Error(ErrorCode::kFormat, "implausible qubit count");
  std::vector<std::uint64_t> ranks(n + 1);
  for (auto& r : ranks) {
    r = get<std::uint64_t>(in);
    if (r == 0 || r > kMaxRank) throw Error(ErrorCode::kFormat, "implausible rank");
  }
  std::vector<CoreType> cores;
  cores.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    CoreType core(ranks[j], ranks[j + 1]);
    in.read(reinterpret_cast<char*>(core.data.data()),
            static_cast<std::streamsize>(core.data.size() * sizeof(T)));
    if (!in) throw Error(ErrorCode::kFormat, "truncated tensor train core");
    cores.push_back(std::move(core));
  }
  return TT(std::move(cores));
}

void write_unitary_mpo(std::ostream& out, const UnitaryMPO& u) {
  out.write(kUMagic.data(), kUMagic.size());
  put(out, kUnitaryMPOFormatVersion);
  put(out, static_cast<std::uint64_t>(u.num_qubits()));
  put(out, static_cast<std::uint64_t>(u.ansatz_rank()));
  put(out, u.scale());
  for (const auto& g : u.gates()) {
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) put(out, g(i, j));
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing unitary MPO");
}

UnitaryMPO read_unitary_mpo(std::istream& in) {
  check_magic(in, kUMagic);
  if (get<std::uint32_t>(in) != kUnitaryMPOFormatVersion) {
    throw Error(ErrorCode::kFormat, "unsupported unitary MPO version");
  }
  const auto n = get<std::uint64_t>(in);
  const auto r = get<std::uint64_t>(in);
  const auto c = get<double>(in);
  if (n == 0 || n > 64 || r == 0 || r > 1024) {
    throw Error(ErrorCode::kFormat, "implausible unitary MPO header");
  }
  std::vector<GateMatrix> gates;
  const auto dim = static_cast<Eigen::Index>(2 * r);
  for (std::uint64_t k = 0; k < n; ++k) {
    GateMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = get<cplx>(in);
    gates.push_back(std::move(g));
  }
  return UnitaryMPO(std::move(gates), r, c);
}

template <typename TT>
std::string encode_tt(const TT& tt) {
  std::ostringstream out(std::ios::binary);
  write_tt(out, tt);
  return std::move(out).str();
}

template <typename TT>
TT decode_tt(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_tt<TT>(in);
}

std::string encode_unitary_mpo(const UnitaryMPO& u) {
  std::ostringstream out(std::ios::binary);
  write_unitary_mpo(out, u);
  return std::move(out).str();
}

UnitaryMPO decode_unitary_mpo(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_unitary_mpo(in);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const auto parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) {
    throw Error(ErrorCode::kIo, "output directory does not exist: " + parent.string());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename onto " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

#define TNQPI_INSTANTIATE_IO(TT)                       \
  template void write_tt<TT>(std::ostream&, const TT&); \
  template TT read_tt<TT>(std::istream&);               \
  template std::string encode_tt<TT>(const TT&);        \
  template TT decode_tt<TT>(const std::string&);

TNQPI_INSTANTIATE_IO(TTVector)
TNQPI_INSTANTIATE_IO(TTOperator)
TNQPI_INSTANTIATE_IO(ComplexTTVector)
TNQPI_INSTANTIATE_IO(ComplexTTOperator)

#undef TNQPI_INSTANTIATE_IO

}  // namespace tnqpi
