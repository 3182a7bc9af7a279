#include "meanlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "meanlab/families.hpp"

namespace meanlab {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MeanDescriptor parse() {
    auto m = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return m;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string ident() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a mean name");
    return s_.substr(start, i_ - start);
  }

  double number() {
    skip();
    const std::size_t start = i_;
    double v = 0.0;
    const char* first = s_.data() + i_;
    const char* last = s_.data() + s_.size();
    // from_chars rejects a leading '+', so strip it here.
    bool plus = false;
    if (first < last && *first == '+') {
      plus = true;
      ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::fixed);
    if (ec != std::errc() || (plus && first < last && *first == '-')) {
      i_ = start;
      fail("expected a number");
    }
    i_ = static_cast<std::size_t>(ptr - s_.data());
    skip();
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      skip();
      const std::size_t dstart = i_;
      double d = 0.0;
      auto [p2, ec2] = std::from_chars(s_.data() + i_, last, d, std::chars_format::fixed);
      if (ec2 != std::errc() || d <= 0.0) {
        i_ = dstart;
        fail("expected a positive denominator");
      }
      i_ = static_cast<std::size_t>(p2 - s_.data());
      v /= d;
    }
    if (!std::isfinite(v)) {
      i_ = start;
      fail("parameter is not finite");
    }
    return v;
  }

  MeanDescriptor expr() {
    skip();
    const std::size_t start = i_;
    const std::string name = ident();
    if (name.size() == 1 && std::string("HGLIASPT").find(name[0]) != std::string::npos) {
      return elementary(name[0]);
    }
    auto one = [&](auto make) {
      expect('(');
      const double p = number();
      expect(')');
      return make(p);
    };
    if (name == "holder") return one(holder);
    if (name == "lehmer") return one(lehmer);
    if (name == "genlog") return one(gen_log);
    if (name == "lambda") return one(lambda_mean);
    if (name == "k") return one(k_mean);
    if (name == "stolarsky") {
      expect('(');
      const double r = number();
      expect(',');
      const double s = number();
      expect(')');
      return stolarsky(r, s);
    }
    if (name == "dual") {
      expect('(');
      auto m = expr();
      expect(')');
      return dual(m);
    }
    if (name == "pow") {
      expect('(');
      auto m = expr();
      expect(',');
      const double s = number();
      expect(')');
      return power_transform(m, s);
    }
    i_ = start;
    fail("unknown mean '" + name + "'");
  }
};

}  // namespace

MeanDescriptor parse_mean_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace meanlab
