#pragma once

// Binary tensor file:
//
//   offset  size        field
//   0       4           magic "EVT1"
//   4       1           method tag: 0 exact, 1 svd, 2 hosvd
//   5       2           rank, unsigned little-endian
//   7       19683 * 8   values in StateIndex order, IEEE-754 binary64 little-endian
//
// Total 157 471 bytes.

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "ttt/eval_tensor.hpp"

namespace ttt {

inline constexpr std::size_t kTensorFileSize = 4 + 1 + 2 + static_cast<std::size_t>(kStateCount) * 8;

class TensorFileError : public std::runtime_error {
 public:
  enum class Kind { Io, BadMagic, BadSize, BadMethod };
  TensorFileError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::vector<std::uint8_t> encode_tensor(const EvalTensor& tensor);
EvalTensor decode_tensor(std::span<const std::uint8_t> bytes);

void write_tensor_file(const std::filesystem::path& path, const EvalTensor& tensor);
EvalTensor read_tensor_file(const std::filesystem::path& path);

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

}  // namespace ttt
