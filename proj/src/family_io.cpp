#include "downsets/family_io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "downsets/errors.hpp"

namespace downsets {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParsedFamily parse_family(std::string_view text, const Limits& limits) {
  ParsedFamily parsed;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Face> members;
  std::vector<std::size_t> member_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = tokens(line);
    if (words.empty()) continue;

    if (!have_header) {
      if (words.size() != 2 || words[0] != "n") {
        throw ParseError(line_no, "expected header 'n <N>'");
      }
      n = parse_index(words[1], line_no);
      if (n > limits.n_max) {
        throw GroundSetTooLarge("line " + std::to_string(line_no) + ": n=" + std::to_string(n) +
                                " exceeds the cap " + std::to_string(limits.n_max));
      }
      have_header = true;
      continue;
    }

    Face face(n);
    if (words.size() == 1 && words[0] == "-") {
      members.push_back(std::move(face));
      member_lines.push_back(line_no);
      continue;
    }
    std::size_t previous = 0;
    for (const auto word : words) {
      const auto element = parse_index(word, line_no);
      if (element == 0 || element > n) {
        throw MemberOutOfRange("line " + std::to_string(line_no) + ": element " +
                               std::to_string(element) + " is outside [1, " + std::to_string(n) + "]");
      }
      if (element <= previous) {
        throw ParseError(line_no, "elements must be strictly increasing");
      }
      previous = element;
      face.insert(element);
    }
    members.push_back(std::move(face));
    member_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n <N>'");

  std::map<Face, std::size_t> first_seen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto [it, fresh] = first_seen.try_emplace(members[i], member_lines[i]);
    if (!fresh) {
      parsed.diagnostics.push_back("line " + std::to_string(member_lines[i]) + ": duplicate of line " +
                                   std::to_string(it->second) + " removed");
    }
  }
  parsed.family = normalize(SetFamily(n, std::move(members)));
  return parsed;
}

std::string write_family(const SetFamily& family) {
  std::ostringstream out;
  out << "n " << family.ground_size() << '\n';
  for (const auto& face : family) {
    const auto elements = face.elements();
    if (elements.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) out << (i == 0 ? "" : " ") << elements[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace downsets
