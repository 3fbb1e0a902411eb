#include <doctest.h>

#include <filesystem>
#include <random>

#include "dropgraph/codec.hpp"
#include "dropgraph/config.hpp"
#include "dropgraph/error.hpp"

using namespace dropgraph;

TEST_CASE("codec names") {
  CHECK(parse_codec("png") == Codec::kPng);
  CHECK(parse_codec("jpeg") == Codec::kJpeg);
  CHECK(parse_codec("jpg") == Codec::kJpeg);
  CHECK(std::string(to_string(Codec::kJpeg)) == "jpeg");
  CHECK_THROWS_AS(parse_codec("gif"), Error);
}

TEST_CASE("png round-trips grayscale exactly") {
  std::mt19937_64 rng(83);
  Raster<std::uint8_t> gray(37, 21);
  for (auto& v : gray.pixels()) v = static_cast<std::uint8_t>(rng());
  const auto bytes = encode_png_gray(gray);
  CHECK(bytes == encode_png_gray(gray));
  const auto img = decode_image(bytes);
  REQUIRE(img.width() == 37);
  REQUIRE(img.height() == 21);
  for (int y = 0; y < 21; ++y) {
    for (int x = 0; x < 37; ++x) {
      CHECK(img(x, y) == Rgb{gray(x, y), gray(x, y), gray(x, y)});
    }
  }
}

TEST_CASE("jpeg round-trips a flat image closely") {
  Raster<std::uint8_t> gray(32, 32, 200);
  const auto bytes = encode_jpeg_gray(gray);
  CHECK(bytes.size() > 2);
  CHECK(bytes[0] == 0xFF);
  CHECK(bytes[1] == 0xD8);
  const auto img = decode_image(bytes);
  for (const Rgb& p : img.pixels()) CHECK(std::abs(int(p.r) - 200) <= 2);
  CHECK_THROWS_AS(encode_jpeg_gray(gray, JpegSettings{0, true}), Error);
}

TEST_CASE("decode rejects garbage") {
  const std::vector<std::uint8_t> junk{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  try {
    decode_image(junk);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDecode);
  }
  auto png = encode_png_gray(Raster<std::uint8_t>(16, 16, 9));
  png.resize(png.size() / 2);
  CHECK_THROWS_AS(decode_image(png), Error);
}

TEST_CASE("sha256 known vectors") {
  const std::string abc = "abc";
  CHECK(sha256_hex({reinterpret_cast<const std::uint8_t*>(abc.data()), abc.size()}) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex({}) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "dropgraph_codec_test";
  std::filesystem::create_directories(dir);
  Raster<std::uint8_t> gray(8, 8, 0);
  gray(3, 3) = 255;
  write_png_gray(dir / "g.png", gray);
  CHECK(read_image(dir / "g.png")(3, 3) == Rgb{255, 255, 255});
  ColorImage rgb(4, 4, Rgb{10, 20, 30});
  write_png_rgb(dir / "c.png", rgb);
  CHECK(read_image(dir / "c.png") == rgb);
  CHECK(read_file(dir / "c.png").size() > 8);
  CHECK_THROWS_AS(read_file(dir / "missing.png"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("key-value parsing") {
  const auto kv = parse_key_values("# comment\n a = 1 \n\nb=two words # trailing\na = 3\n");
  CHECK(kv.size() == 2);
  CHECK(kv.at("a") == "3");
  CHECK(kv.at("b") == "two words");
  CHECK_THROWS_AS(parse_key_values("novalue\n"), Error);
}
