#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cube_spectra/codes.hpp"

namespace cube_spectra {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw CodeParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::string to_bit_string(Point x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

Code read_code(std::istream& in) {
  std::optional<int> header_n;
  std::optional<int> bit_length;
  std::size_t bit_length_line = 0;
  struct Pending {
    std::uint64_t value;
    std::size_t line_no;
  };
  std::vector<Pending> words;
  bool any_hex = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (header_n) fail(line_no, "repeated n= header");
      int n = 0;
      auto digits = trim(line.substr(2));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1 || n > kHardDimensionCap) {
        fail(line_no, "malformed n= header");
      }
      header_n = n;
      continue;
    }

    if (line.starts_with("0x") || line.starts_with("0X")) {
      auto digits = line.substr(2);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        fail(line_no, "malformed hex codeword");
      }
      words.push_back({value, line_no});
      any_hex = true;
      continue;
    }

    if (line.find_first_not_of("01") != std::string_view::npos) {
      fail(line_no, "codeword must be a 0/1 string or 0x-prefixed hex");
    }
    const int len = static_cast<int>(line.size());
    if (!bit_length) {
      bit_length = len;
      bit_length_line = line_no;
    } else if (*bit_length != len) {
      fail(line_no, "codeword length " + std::to_string(len) + " differs from length " +
                        std::to_string(*bit_length) + " on line " + std::to_string(bit_length_line));
    }
    if (len > kHardDimensionCap) fail(line_no, "codeword longer than supported");
    std::uint64_t value = 0;
    for (char ch : line) value = (value << 1) | static_cast<std::uint64_t>(ch == '1');
    words.push_back({value, line_no});
  }

  int n = 0;
  if (header_n && bit_length && *header_n != *bit_length) {
    throw CodeParseError("n= header says " + std::to_string(*header_n) +
                         " but codewords have length " + std::to_string(*bit_length));
  }
  if (any_hex && !header_n) throw CodeParseError("hex codewords require an n= header");
  if (header_n) {
    n = *header_n;
  } else if (bit_length) {
    n = *bit_length;
  }
  if (words.empty()) throw CodeParseError("no codewords");

  std::vector<Point> points;
  points.reserve(words.size());
  for (const auto& w : words) {
    if (w.value >= cube_size(n)) fail(w.line_no, "codeword does not fit in n=" + std::to_string(n));
    points.push_back(static_cast<Point>(w.value));
  }
  try {
    return Code(n, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw CodeParseError(e.what());
  }
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodeParseError("cannot open code file '" + path + "'");
  try {
    return read_code(in);
  } catch (const CodeParseError& e) {
    throw CodeParseError(path + ": " + e.what());
  }
}

void write_code(std::ostream& out, const Code& c) {
  for (Point x : c.points()) out << to_bit_string(x, c.length()) << '\n';
}

}  // namespace cube_spectra
