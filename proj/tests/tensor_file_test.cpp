#include "ttt/tensor_file.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <fstream>

#include "test_support.hpp"

namespace {

using Kind = ttt::TensorFileError::Kind;
using ttt::testing::exact_tensor;

Kind decode_error(std::span<const std::uint8_t> bytes) {
  try {
    ttt::decode_tensor(bytes);
  } catch (const ttt::TensorFileError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "decode succeeded";
  return Kind::Io;
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / ("ttt_" + std::to_string(::getpid()) + "_" + name);
}

TEST(TensorFile, LayoutAndSize) {
  const auto bytes = ttt::encode_tensor(exact_tensor());
  ASSERT_EQ(bytes.size(), 157471u);
  EXPECT_EQ(std::memcmp(bytes.data(), "EVT1", 4), 0);
  EXPECT_EQ(bytes[4], 0);
  // Empty board value is the first payload double, little-endian.
  double first = 0.0;
  std::uint64_t bits = 0;
  for (int b = 7; b >= 0; --b) bits = (bits << 8) | bytes[7 + static_cast<std::size_t>(b)];
  std::memcpy(&first, &bits, 8);
  EXPECT_EQ(first, exact_tensor().values[0]);
}

TEST(TensorFile, RankStoredLittleEndian) {
  ttt::EvalTensor t = ttt::EvalTensor::zeros();
  t.meta = {ttt::Method::Hosvd, 0x0102};
  const auto bytes = ttt::encode_tensor(t);
  EXPECT_EQ(bytes[4], 2);
  EXPECT_EQ(bytes[5], 0x02);
  EXPECT_EQ(bytes[6], 0x01);
}

TEST(TensorFile, RoundTripIsBitExact) {
  const auto approx = ttt::approximate(ttt::testing::exact_svd_basis(), 18);
  const auto path = temp_path("roundtrip.evt");
  ttt::write_tensor_file(path, approx);
  const auto back = ttt::read_tensor_file(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.meta, approx.meta);
  ASSERT_EQ(back.values.size(), approx.values.size());
  EXPECT_EQ(std::memcmp(back.values.data(), approx.values.data(), approx.values.size() * sizeof(double)), 0);
}

TEST(TensorFile, RebuildIsByteIdentical) {
  const auto a = ttt::encode_tensor(ttt::build_exact());
  const auto b = ttt::encode_tensor(ttt::build_exact());
  EXPECT_EQ(a, b);
  EXPECT_EQ(ttt::fnv1a64(a), ttt::fnv1a64(b));
}

TEST(TensorFile, DistinctErrors) {
  auto bytes = ttt::encode_tensor(exact_tensor());
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_EQ(decode_error(bad_magic), Kind::BadMagic);

  auto short_file = bytes;
  short_file.pop_back();
  EXPECT_EQ(decode_error(short_file), Kind::BadSize);

  auto bad_method = bytes;
  bad_method[4] = 7;
  EXPECT_EQ(decode_error(bad_method), Kind::BadMethod);

  EXPECT_EQ(decode_error(std::span<const std::uint8_t>{}), Kind::BadMagic);
}

TEST(TensorFile, MissingFileIsIoError) {
  try {
    ttt::read_tensor_file(temp_path("does_not_exist.evt"));
    FAIL();
  } catch (const ttt::TensorFileError& e) {
    EXPECT_EQ(e.kind(), Kind::Io);
  }
}

TEST(Fnv1a, ReferenceVectors) {
  const std::string a = "a";
  EXPECT_EQ(ttt::fnv1a64({}), 0xcbf29ce484222325ULL);
  EXPECT_EQ(ttt::fnv1a64(std::span(reinterpret_cast<const std::uint8_t*>(a.data()), a.size())),
            0xaf63dc4c8601ec8cULL);
}

}  // namespace
