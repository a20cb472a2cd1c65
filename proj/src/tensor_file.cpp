#include "ttt/tensor_file.hpp"

#include <bit>
#include <fstream>
#include <iterator>

namespace ttt {

std::vector<std::uint8_t> encode_tensor(const EvalTensor& tensor) {
  if (tensor.values.size() != static_cast<std::size_t>(kStateCount)) {
    throw std::invalid_argument("tensor must hold 3^9 values");
  }
  if (tensor.meta.rank < 0 || tensor.meta.rank > 0xFFFF) throw std::invalid_argument("rank does not fit in 16 bits");
  std::vector<std::uint8_t> out;
  out.reserve(kTensorFileSize);
  out.insert(out.end(), {'E', 'V', 'T', '1'});
  out.push_back(static_cast<std::uint8_t>(tensor.meta.method));
  const auto rank = static_cast<std::uint16_t>(tensor.meta.rank);
  out.push_back(static_cast<std::uint8_t>(rank & 0xFF));
  out.push_back(static_cast<std::uint8_t>(rank >> 8));
  for (double v : tensor.values) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
  }
  return out;
}

EvalTensor decode_tensor(std::span<const std::uint8_t> bytes) {
  using Kind = TensorFileError::Kind;
  if (bytes.size() < 4 || bytes[0] != 'E' || bytes[1] != 'V' || bytes[2] != 'T' || bytes[3] != '1') {
    throw TensorFileError(Kind::BadMagic, "not a tensor file (bad magic)");
  }
  if (bytes.size() != kTensorFileSize) {
    throw TensorFileError(Kind::BadSize, "tensor file has " + std::to_string(bytes.size()) + " bytes, expected " +
                                             std::to_string(kTensorFileSize));
  }
  if (bytes[4] > 2) throw TensorFileError(Kind::BadMethod, "unknown method tag " + std::to_string(bytes[4]));
  EvalTensor t;
  t.meta.method = static_cast<Method>(bytes[4]);
  t.meta.rank = bytes[5] | (bytes[6] << 8);
  const auto payload = bytes.subspan(7);
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | payload[i * 8 + static_cast<std::size_t>(b)];
    t.values[i] = std::bit_cast<double>(bits);
  }
  return t;
}

void write_tensor_file(const std::filesystem::path& path, const EvalTensor& tensor) {
  const auto bytes = encode_tensor(tensor);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TensorFileError(TensorFileError::Kind::Io, "cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw TensorFileError(TensorFileError::Kind::Io, "write failed: " + path.string());
}

EvalTensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TensorFileError(TensorFileError::Kind::Io, "cannot open for reading: " + path.string());
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return decode_tensor(bytes);
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ttt
