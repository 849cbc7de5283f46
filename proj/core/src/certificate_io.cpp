#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "ent2/graph_io.hpp"
#include "ent2/zeta2.hpp"

namespace ent2 {

std::string format_certificate(const Certificate& c) {
  using Kind = Certificate::Kind;
  std::ostringstream os;
  struct Frame {
    Certificate::NodeId id;
    int stage;
  };
  std::vector<Frame> stack;
  for (Certificate::NodeId root : c.roots()) {
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& n = c.node(f.id);
      if (n.kind == Kind::Unit) {
        os << "(eta " << n.vertex << ')';
        stack.pop_back();
      } else if (n.kind == Kind::Molecule) {
        os << "(theta " << int{n.eps} << ' ' << n.dead_count << ' ' << n.vertex << ' ' << n.b
           << " [";
        bool first = true;
        for (VertexId d : c.deads(n)) {
          os << (first ? "" : " ") << d;
          first = false;
        }
        os << "])";
        stack.pop_back();
      } else if (f.stage == 0) {
        os << "(collapse " << n.vertex << ' ';
        f.stage = 1;
        stack.push_back({n.left, 0});
      } else if (f.stage == 1) {
        os << ' ';
        f.stage = 2;
        stack.push_back({n.right, 0});
      } else {
        os << ')';
        stack.pop_back();
      }
    }
    os << '\n';
  }
  return os.str();
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Next token: one of ( ) [ ] or a run of alphanumerics. Empty at the end.
  std::string_view next() {
    skip_space();
    token_line_ = line_;
    if (pos_ == text_.size()) return {};
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      ++pos_;
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_.find_first_of("()[]", pos_) != pos_) {
        ++pos_;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t line() const { return token_line_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t token_line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Certificate run() {
    while (!lex_.at_end()) cert_.add_root(expression());
    return std::move(cert_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, lex_.line()); }

  void expect(std::string_view want) {
    const auto tok = lex_.next();
    if (tok != want) {
      fail("expected '" + std::string(want) + "', got '" + std::string(tok) + "'");
    }
  }

  std::uint64_t number(std::string_view tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("expected a number, got '" + std::string(tok) + "'");
    }
    return value;
  }

  VertexId vertex(std::string_view tok) {
    const auto v = number(tok);
    if (v >= kNoVertex) fail("vertex id too large");
    return static_cast<VertexId>(v);
  }

  VertexId vertex() { return vertex(lex_.next()); }

  Certificate::NodeId expression() {
    // Open collapses whose operands are still being read; `left` is set once
    // the first operand is complete.
    struct Open {
      VertexId z;
      std::optional<Certificate::NodeId> left;
    };
    std::vector<Open> open;
    for (;;) {
      expect("(");
      const auto head = lex_.next();
      Certificate::NodeId node;
      if (head == "collapse") {
        open.push_back({vertex(), std::nullopt});
        continue;
      }
      if (head == "eta") {
        node = cert_.add_unit(vertex());
        expect(")");
      } else if (head == "theta") {
        const auto eps = number(lex_.next());
        if (eps > 1) fail("eps must be 0 or 1");
        const auto n = number(lex_.next());
        const VertexId a = vertex();
        const VertexId b = vertex();
        expect("[");
        deads_.clear();
        for (auto tok = lex_.next(); tok != "]"; tok = lex_.next()) {
          if (tok.empty()) fail("unterminated dead-point list");
          deads_.push_back(vertex(tok));
        }
        if (deads_.size() != n) fail("dead-point count does not match n");
        expect(")");
        node = cert_.add_molecule(static_cast<int>(eps), a, b, deads_);
      } else {
        fail("unknown expression '" + std::string(head) + "'");
      }
      for (;;) {
        if (open.empty()) return node;
        Open& top = open.back();
        if (!top.left) {
          top.left = node;
          break;
        }
        expect(")");
        node = cert_.add_collapse(top.z, *top.left, node);
        open.pop_back();
      }
    }
  }

  Lexer lex_;
  Certificate cert_;
  std::vector<VertexId> deads_;
};

}  // namespace

Certificate parse_certificate(std::string_view text) { return Parser(text).run(); }

}  // namespace ent2
