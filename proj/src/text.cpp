#include "cpath/text.hpp"

#include <fstream>

#include "cpath/error.hpp"

namespace cpath {

namespace {

bool isNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == ':' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PathExpr parseAll() {
    PathExpr e = expr();
    skipWs();
    if (i_ != s_.size()) throw SyntaxError(i_, "trailing input");
    return e;
  }

 private:
  void skipWs() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r'))
      ++i_;
  }

  void expect(char c) {
    skipWs();
    if (i_ >= s_.size() || s_[i_] != c)
      throw SyntaxError(i_, std::string("expected '") + c + "'");
    ++i_;
  }

  std::string name() {
    skipWs();
    std::size_t start = i_;
    while (i_ < s_.size() && isNameChar(s_[i_])) ++i_;
    if (start == i_) throw SyntaxError(i_, "expected a name");
    return std::string(s_.substr(start, i_ - start));
  }

  PathExpr expr() {
    skipWs();
    if (i_ >= s_.size()) throw SyntaxError(i_, "unexpected end of input");
    if (s_[i_] == '(') {
      ++i_;
      PathExpr l = expr();
      expect('.');
      PathExpr r = expr();
      expect(')');
      return PathExpr::trans(std::move(l), std::move(r));
    }
    std::size_t at = i_;
    std::string n = name();
    skipWs();
    bool call = i_ < s_.size() && s_[i_] == '(';
    if (call && n == "refl") {
      ++i_;
      std::string p = name();
      expect(')');
      return PathExpr::refl(std::move(p));
    }
    if (call && n == "inv") {
      ++i_;
      PathExpr c = expr();
      expect(')');
      return PathExpr::symm(std::move(c));
    }
    if (call || n == "refl" || n == "inv") throw SyntaxError(at, "unexpected '" + n + "'");
    if (s_.substr(i_, 3) == "^-1") {
      i_ += 3;
      return PathExpr::edge(std::move(n), Orientation::rev);
    }
    return PathExpr::edge(std::move(n), Orientation::fwd);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

void printInto(const PathExpr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::refl:
      out += "refl(";
      out += e.name();
      out += ')';
      break;
    case NodeKind::edge:
      out += e.name();
      if (e.orientation() == Orientation::rev) out += "^-1";
      break;
    case NodeKind::symm:
      out += "inv(";
      printInto(e.child(), out);
      out += ')';
      break;
    case NodeKind::trans:
      out += '(';
      printInto(e.left(), out);
      out += " . ";
      printInto(e.right(), out);
      out += ')';
      break;
  }
}

}  // namespace

std::string printExpr(const PathExpr& e) {
  std::string out;
  printInto(e, out);
  return out;
}

PathExpr parsePathExprRaw(std::string_view text) { return Parser(text).parseAll(); }

PathExpr parsePathExpr(std::string_view text, const SpacePresentation& space) {
  PathExpr e = parsePathExprRaw(text);
  endpoints(e, space);
  return e;
}

std::string printLetter(const EdgeLetter& l) {
  return l.orientation == Orientation::fwd ? l.edge : l.edge + "^-1";
}

EdgeLetter parseLetter(std::string_view text) {
  std::string t(text);
  Orientation o = Orientation::fwd;
  if (t.size() > 3 && t.ends_with("^-1")) {
    t.resize(t.size() - 3);
    o = Orientation::rev;
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!isNameChar(t[i])) throw SyntaxError(i, "bad letter '" + std::string(text) + "'");
  if (t.empty()) throw SyntaxError(0, "empty letter");
  return {t, o};
}

std::string printLetters(const LetterSeq& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += printLetter(l);
  }
  return out;
}

std::vector<std::string> traceLines(const Derivation& d, const SpacePresentation& space) {
  std::vector<std::string> out;
  PathExpr cur = d.source;
  for (const auto& st : d.steps) {
    PathExpr next = applyStep(cur, st, space);
    std::string line(ruleName(st.rule));
    if (st.direction == Direction::backward) line += "^-1";
    line += " @ " + positionToString(st.position) + " : " + printExpr(cur) + " -> " +
            printExpr(next);
    out.push_back(std::move(line));
    cur = std::move(next);
  }
  return out;
}

Derivation parseTrace(const std::vector<std::string>& lines, const SpacePresentation& space) {
  if (lines.empty()) throw SyntaxError(0, "empty trace");
  Derivation d{PathExpr::refl(""), PathExpr::refl(""), {}};
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    auto at = line.find(" @ ");
    auto colon = line.find(" : ", at == std::string::npos ? 0 : at);
    auto arrow = line.find(" -> ", colon == std::string::npos ? 0 : colon);
    if (at == std::string::npos || colon == std::string::npos || arrow == std::string::npos)
      throw SyntaxError(0, "malformed trace line " + std::to_string(k));
    std::string ruleText = line.substr(0, at);
    Direction dir = Direction::forward;
    if (ruleText.ends_with("^-1")) {
      dir = Direction::backward;
      ruleText.resize(ruleText.size() - 3);
    }
    auto id = parseRuleId(ruleText);
    if (!id) throw SyntaxError(0, "unknown rule '" + ruleText + "'");
    Position pos = parsePosition(line.substr(at + 3, colon - at - 3));
    PathExpr before = parsePathExpr(line.substr(colon + 3, arrow - colon - 3), space);
    PathExpr after = parsePathExpr(line.substr(arrow + 4), space);
    if (k == 0) d.source = before;
    StepInstance st{*id, pos, dir, std::nullopt};
    if (dir == Direction::backward) st.witness = subtermAt(after, pos);
    d.steps.push_back(std::move(st));
    d.target = after;
  }
  return d;
}

nlohmann::json spaceToJson(const SpacePresentation& space) {
  nlohmann::json doc;
  doc["points"] = space.points();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : space.edges())
    doc["edges"].push_back({{"name", e.name}, {"src", e.src}, {"dst", e.dst}});
  doc["relators"] = nlohmann::json::array();
  for (const auto& r : space.relators()) {
    auto arr = nlohmann::json::array();
    for (const auto& l : r) arr.push_back(printLetter(l));
    doc["relators"].push_back(std::move(arr));
  }
  doc["basepoint"] = space.basepoint();
  return doc;
}

SpacePresentation spaceFromJson(const nlohmann::json& doc) {
  try {
    std::vector<std::string> points = doc.at("points").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges"))
      edges.push_back({e.at("name").get<std::string>(), e.at("src").get<std::string>(),
                       e.at("dst").get<std::string>()});
    std::vector<LetterSeq> relators;
    if (doc.contains("relators")) {
      for (const auto& r : doc.at("relators")) {
        LetterSeq seq;
        for (const auto& l : r) seq.push_back(parseLetter(l.get<std::string>()));
        relators.push_back(std::move(seq));
      }
    }
    return SpacePresentation(std::move(points), std::move(edges), std::move(relators),
                             doc.at("basepoint").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpace, e.what());
  } catch (const SyntaxError& e) {
    throw Error(ErrorCode::InvalidSpace, e.what());
  }
}

SpacePresentation loadSpaceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpace, "cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpace, e.what());
  }
  return spaceFromJson(doc);
}

}  // namespace cpath
