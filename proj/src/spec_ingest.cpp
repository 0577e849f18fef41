#include "efpm/spec_ingest.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace efpm {

namespace {

struct Token {
  std::string_view text;  // quotes stripped for quoted tokens
  int column;
  bool quoted;
};

// Columns count code points, not bytes.
int column_of(std::string_view line, std::size_t byte_offset) {
  int col = 1;
  for (std::size_t i = 0; i < byte_offset; ++i) {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  }
  return col;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

class LineParser {
public:
  LineParser(std::string_view line, int line_no, std::vector<ParseError>& errors)
      : line_(line), line_no_(line_no), errors_(errors) {}

  // Returns false when the line could not be split into tokens.
  bool tokenize(std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < line_.size()) {
      if (is_space(line_[i])) {
        ++i;
        continue;
      }
      if (line_[i] == '#') break;
      if (line_[i] == '"') {
        const std::size_t close = line_.find('"', i + 1);
        if (close == std::string_view::npos) {
          error(i, "unterminated quoted name", line_.substr(i));
          return false;
        }
        out.push_back({line_.substr(i + 1, close - i - 1), column_of(line_, i), true});
        i = close + 1;
        if (i < line_.size() && !is_space(line_[i]) && line_[i] != '#') {
          error(i, "expected whitespace after quoted name", line_.substr(i, 1));
          return false;
        }
        continue;
      }
      std::size_t end = i;
      while (end < line_.size() && !is_space(line_[end])) ++end;
      out.push_back({line_.substr(i, end - i), column_of(line_, i), false});
      i = end;
    }
    return true;
  }

  void error(const Token& at, std::string message) {
    errors_.push_back({line_no_, at.column, std::move(message), std::string(at.text)});
  }

  void error(std::size_t byte_offset, std::string message, std::string_view text) {
    errors_.push_back(
        {line_no_, column_of(line_, byte_offset), std::move(message), std::string(text)});
  }

  std::string_view line() const { return line_; }

private:
  std::string_view line_;
  int line_no_;
  std::vector<ParseError>& errors_;
};

struct AttributeSpec {
  std::string_view first;  // "rets" or "ftrs"
  int first_min;
};

AttributeSpec attributes_for(FunctionKind kind) {
  return is_data_kind(kind) ? AttributeSpec{"rets", 1} : AttributeSpec{"ftrs", 0};
}

std::optional<FunctionKind> keyword_kind(std::string_view word) {
  if (word == "ilf") return FunctionKind::ILF;
  if (word == "eif") return FunctionKind::EIF;
  if (word == "ei") return FunctionKind::EI;
  if (word == "eo") return FunctionKind::EO;
  if (word == "eq") return FunctionKind::EQ;
  return std::nullopt;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  return out;
}

}  // namespace

Parsed<Project> parse_spec(std::string_view source) {
  std::vector<ParseError> errors;
  std::optional<Project> project;
  bool header_error_reported = false;
  std::vector<std::string> seen_names;

  if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const std::size_t nl = source.find('\n', pos);
    std::string_view line = source.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser lp(line, line_no, errors);
    std::vector<Token> tokens;
    if (!lp.tokenize(tokens)) continue;
    if (tokens.empty()) continue;

    const Token& keyword = tokens.front();
    if (keyword.quoted) {
      lp.error(keyword, "expected a keyword (project, ilf, eif, ei, eo, eq)");
      continue;
    }

    if (keyword.text == "project") {
      if (project || header_error_reported) {
        lp.error(keyword, "duplicate project header");
        continue;
      }
      if (tokens.size() < 2 || !tokens[1].quoted) {
        lp.error(tokens.size() < 2 ? keyword : tokens[1], "project header needs a quoted name");
        header_error_reported = true;
        continue;
      }
      if (tokens.size() > 2) {
        lp.error(tokens[2], "unexpected text after project name");
      }
      project.emplace(std::string(tokens[1].text));
      continue;
    }

    const auto kind = keyword_kind(keyword.text);
    if (!kind) {
      lp.error(keyword, "unknown keyword '" + std::string(keyword.text) + "'");
      continue;
    }
    if (!project && !header_error_reported) {
      lp.error(keyword, "missing project header: expected 'project \"<name>\"' first");
      header_error_reported = true;
    }

    if (tokens.size() < 2 || !tokens[1].quoted) {
      lp.error(tokens.size() < 2 ? keyword : tokens[1],
               "expected a quoted function name after '" + std::string(keyword.text) + "'");
      continue;
    }
    const Token& name = tokens[1];
    bool line_ok = true;
    if (name.text.empty()) {
      lp.error(name, "function name must not be empty");
      line_ok = false;
    }

    const AttributeSpec spec = attributes_for(*kind);
    std::optional<int> first;
    std::optional<int> dets;
    bool seen_first = false;
    bool seen_dets = false;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      const std::size_t eq = tok.text.find('=');
      if (tok.quoted || eq == std::string_view::npos) {
        lp.error(tok, "expected attribute of the form key=value");
        line_ok = false;
        continue;
      }
      const std::string key(tok.text.substr(0, eq));
      const std::string_view value = tok.text.substr(eq + 1);
      std::optional<int>* slot = nullptr;
      bool* seen = nullptr;
      int min = 1;
      if (key == spec.first) {
        slot = &first;
        seen = &seen_first;
        min = spec.first_min;
      } else if (key == "dets") {
        slot = &dets;
        seen = &seen_dets;
      } else {
        lp.error(tok, "unknown attribute '" + key + "' for " + std::string(keyword.text));
        line_ok = false;
        continue;
      }
      if (*seen) {
        lp.error(tok, "duplicate attribute '" + key + "'");
        line_ok = false;
        continue;
      }
      *seen = true;
      int parsed = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (value.empty() || (ec != std::errc{} && ec != std::errc::result_out_of_range) ||
          end != value.data() + value.size()) {
        lp.error(tok, "value of '" + key + "' is not an integer");
        line_ok = false;
        continue;
      }
      if (ec == std::errc::result_out_of_range || parsed < min) {
        lp.error(tok, "value of '" + key + "' out of range (must be at least " +
                          std::to_string(min) + ")");
        line_ok = false;
        continue;
      }
      *slot = parsed;
    }
    for (auto [present, attr] : {std::pair{seen_first, spec.first},
                                 std::pair{seen_dets, std::string_view("dets")}}) {
      if (!present) {
        lp.error(keyword, "missing attribute '" + std::string(attr) + "'");
        line_ok = false;
      }
    }
    if (!line_ok) continue;

    const std::string fname(name.text);
    bool duplicate = false;
    for (const auto& n : seen_names) duplicate = duplicate || n == fname;
    if (duplicate) {
      lp.error(name, "duplicate function name '" + fname + "'");
      continue;
    }
    seen_names.push_back(fname);
    if (!project) continue;
    if (is_data_kind(*kind)) {
      project->add(DataFunction(fname, *kind, *first, *dets));
    } else {
      project->add(TransactionalFunction(fname, *kind, *first, *dets));
    }
  }

  if (!project && !header_error_reported) {
    errors.push_back({1, 1, "missing project header: expected 'project \"<name>\"' first", ""});
  }
  if (!errors.empty()) return errors;
  return std::move(*project);
}

std::string render_spec(const Project& project) {
  std::string out = "project \"" + project.name() + "\"\n";
  auto keyword = [](FunctionKind k) { return lower(to_string(k)); };
  for (const auto& f : project.data_functions()) {
    out += keyword(f.kind()) + " \"" + f.name() + "\" rets=" + std::to_string(f.rets()) +
           " dets=" + std::to_string(f.dets()) + "\n";
  }
  for (const auto& f : project.transactional_functions()) {
    out += keyword(f.kind()) + " \"" + f.name() + "\" ftrs=" + std::to_string(f.ftrs()) +
           " dets=" + std::to_string(f.dets()) + "\n";
  }
  return out;
}

}  // namespace efpm
