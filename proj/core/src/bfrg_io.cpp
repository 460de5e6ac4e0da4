#include "bfrg/bfrg_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

constexpr char kMagic[] = "BFRG";

std::uint64_t payload_bytes(unsigned arity) {
  return ((std::uint64_t{1} << arity) + 7) / 8;
}

}  // namespace

void write_table(const TruthTable& t, std::ostream& out) {
  out << kMagic << " 1 n=" << t.arity() << '\n';
  const std::uint64_t bytes = payload_bytes(t.arity());
  std::vector<char> buf(bytes);
  const auto words = t.words();
  for (std::uint64_t b = 0; b < bytes; ++b) {
    buf[b] = static_cast<char>((words[b >> 3] >> ((b & 7) * 8)) & 0xFF);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_table(const TruthTable& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(ParseError::Kind::kIo, "cannot open " + path.string() + " for writing");
  write_table(t, out);
  if (!out) throw ParseError(ParseError::Kind::kIo, "write failed: " + path.string());
}

TruthTable read_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(ParseError::Kind::kTruncated, "missing BFRG header");

  if (header.rfind("BFRG ", 0) != 0) throw ParseError(ParseError::Kind::kBadMagic, "not a BFRG file");
  if (header.compare(5, 4, "1 n=") != 0) {
    throw ParseError(ParseError::Kind::kBadVersion, "unsupported BFRG header: " + header);
  }
  const std::string arity_text = header.substr(9);
  if (arity_text.empty() || arity_text.size() > 3 ||
      arity_text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(ParseError::Kind::kBadArity, "bad arity field: '" + arity_text + "'");
  }
  const unsigned long arity = std::stoul(arity_text);
  if (arity > TruthTable::kMaxArity) {
    throw ParseError(ParseError::Kind::kBadArity, "arity " + arity_text + " exceeds maximum");
  }

  const std::uint64_t bytes = payload_bytes(static_cast<unsigned>(arity));
  std::vector<char> buf(bytes);
  in.read(buf.data(), static_cast<std::streamsize>(bytes));
  if (static_cast<std::uint64_t>(in.gcount()) != bytes) {
    throw ParseError(ParseError::Kind::kTruncated,
                     "payload truncated: expected " + std::to_string(bytes) + " bytes, got " +
                         std::to_string(in.gcount()));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError(ParseError::Kind::kTrailingData, "unexpected data after payload");
  }

  const std::size_t nwords = arity <= 6 ? 1 : std::size_t{1} << (arity - 6);
  std::vector<std::uint64_t> words(nwords, 0);
  for (std::uint64_t b = 0; b < bytes; ++b) {
    words[b >> 3] |= std::uint64_t{static_cast<unsigned char>(buf[b])} << ((b & 7) * 8);
  }
  if ((words[0] & ~TruthTable::word_mask(static_cast<unsigned>(arity))) != 0) {
    throw ParseError(ParseError::Kind::kBadPadding, "padding bits past 2^n are set");
  }
  return TruthTable::from_words(static_cast<unsigned>(arity), std::move(words));
}

TruthTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::kIo, "cannot open " + path.string());
  return read_table(in);
}

}  // namespace bfrg
