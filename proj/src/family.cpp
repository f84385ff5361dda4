#include <cctype>

#include "twocycles/structure.hpp"

namespace twocycles {

int Family::order() const {
  switch (kind) {
    case Kind::complete:
    case Kind::edgeless: return a;
    case Kind::complete_bipartite: return a + b;
    case Kind::join:
    case Kind::disjoint_union: {
      int total = 0;
      for (const auto& p : parts) total += p.order();
      return total;
    }
  }
  return 0;
}

namespace {

// Writes f onto vertices [offset, offset + f.order()) of g.
void place(const Family& f, Graph& g, int offset) {
  using Kind = Family::Kind;
  switch (f.kind) {
    case Kind::complete:
      for (int i = 0; i < f.a; ++i)
        for (int j = i + 1; j < f.a; ++j) g.add_edge(offset + i, offset + j);
      return;
    case Kind::edgeless: return;
    case Kind::complete_bipartite:
      for (int i = 0; i < f.a; ++i)
        for (int j = 0; j < f.b; ++j) g.add_edge(offset + i, offset + f.a + j);
      return;
    case Kind::join:
    case Kind::disjoint_union: {
      int start = offset;
      for (std::size_t k = 0; k < f.parts.size(); ++k) {
        place(f.parts[k], g, start);
        const int width = f.parts[k].order();
        if (f.kind == Kind::join) {
          for (int i = offset; i < start; ++i)
            for (int j = start; j < start + width; ++j) g.add_edge(i, j);
        }
        start += width;
      }
      return;
    }
  }
}

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : s_(text) {}

  Family parse() {
    Family f = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("family descriptor at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 3) fail("number too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Family expr() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char head = s_[pos_++];
    switch (head) {
      case 'K': return Family::complete(number());
      case 'E': return Family::edgeless(number());
      case 'B': {
        expect('(');
        const int a = number();
        expect(',');
        const int b = number();
        expect(')');
        return Family::complete_bipartite(a, b);
      }
      case 'J':
      case 'U': {
        expect('(');
        std::vector<Family> parts{expr()};
        skip_space();
        while (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          parts.push_back(expr());
          skip_space();
        }
        expect(')');
        return head == 'J' ? Family::join(std::move(parts))
                           : Family::disjoint_union(std::move(parts));
      }
      default: --pos_; fail(std::string("unknown family '") + head + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph gen_family(const Family& f) {
  const int n = f.order();
  if (n > kMaxOrder) throw InputError("family order " + std::to_string(n) + " exceeds 64");
  if (n < 1) throw InputError("family has no vertices");
  Graph g(n);
  place(f, g, 0);
  return g;
}

Family parse_family(std::string_view text) { return FamilyParser(text).parse(); }

std::string to_string(const Family& f) {
  using Kind = Family::Kind;
  switch (f.kind) {
    case Kind::complete: return "K" + std::to_string(f.a);
    case Kind::edgeless: return "E" + std::to_string(f.a);
    case Kind::complete_bipartite:
      return "B(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
    case Kind::join:
    case Kind::disjoint_union: {
      std::string out = f.kind == Kind::join ? "J(" : "U(";
      for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (i) out += ',';
        out += to_string(f.parts[i]);
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace twocycles
