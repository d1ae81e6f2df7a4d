#include "screenparse/corpus.hpp"

#include <fstream>
#include <istream>

#include "screenparse/error.hpp"

namespace screenparse {

bool AnnotatedUtterance::has_keep() const {
  return !tokens.empty() && tokens.front().keep.has_value();
}

std::vector<Token> AnnotatedUtterance::plain_tokens() const {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.token);
  return out;
}

std::optional<std::vector<std::size_t>> AnnotatedUtterance::gold_surviving() const {
  if (!has_keep()) return std::nullopt;
  std::vector<std::size_t> out;
  for (const auto& t : tokens)
    if (*t.keep) out.push_back(t.token.position);
  return out;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    const auto tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab - begin));
    if (tab == std::string::npos) break;
    begin = tab + 1;
  }
  return fields;
}

bool parse_bit(const std::string& field, const std::string& what, const std::string& source,
               std::size_t line) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw ParseError(source, line, what + " must be 0 or 1, got '" + field + "'");
}

}  // namespace

std::vector<AnnotatedUtterance> load_corpus(std::istream& in, const std::string& source,
                                            const CategoryInventory& basic,
                                            const CategoryInventory& abstract_) {
  std::vector<AnnotatedUtterance> corpus;
  AnnotatedUtterance current;
  auto close = [&](std::size_t line_no) {
    if (current.tokens.empty()) return;
    const bool keep = current.tokens.front().keep.has_value();
    for (const auto& t : current.tokens)
      if (t.keep.has_value() != keep)
        throw ParseError(source, t.line,
                         "keep column must be present on every token of an utterance or on "
                         "none (utterance ending at line " + std::to_string(line_no) + ")");
    corpus.push_back(std::move(current));
    current = {};
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      close(line_no);
      continue;
    }
    if (line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4 && fields.size() != 5)
      throw ParseError(source, line_no,
                       "expected 4 or 5 tab-separated fields, got " +
                           std::to_string(fields.size()));
    if (fields[0].empty()) throw ParseError(source, line_no, "empty surface form");
    AnnotatedToken tok;
    tok.token = Token(fields[0], current.tokens.size());
    tok.line = line_no;
    const auto b = basic.find(fields[1]);
    if (!b) throw ParseError(source, line_no, "unknown basic label '" + fields[1] + "'");
    const auto a = abstract_.find(fields[2]);
    if (!a) throw ParseError(source, line_no, "unknown abstract label '" + fields[2] + "'");
    tok.basic = basic.code(*b);
    tok.abstract_ = abstract_.code(*a);
    tok.start = parse_bit(fields[3], "start", source, line_no);
    if (fields.size() == 5) tok.keep = parse_bit(fields[4], "keep", source, line_no);
    current.tokens.push_back(std::move(tok));
  }
  close(line_no);
  return corpus;
}

std::vector<AnnotatedUtterance> load_corpus(const std::filesystem::path& path,
                                            const CategoryInventory& basic,
                                            const CategoryInventory& abstract_) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus: " + path.string());
  return load_corpus(in, path.string(), basic, abstract_);
}

std::size_t word_count(const std::vector<AnnotatedUtterance>& corpus) {
  std::size_t n = 0;
  for (const auto& u : corpus) n += u.tokens.size();
  return n;
}

}  // namespace screenparse
