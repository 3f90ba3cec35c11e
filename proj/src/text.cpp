#include "locgenus/text.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "locgenus/error.hpp"

namespace locgenus {

namespace {

enum class ValueContext { Height, NPlusEntry };

// Either a finite number, or the context's special symbol (`inf` / `*`).
struct RawValue {
  bool special = false;
  std::uint64_t number = 0;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_).starts_with(word)) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ptr == begin) fail("expected a number");
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  RawValue value(ValueContext context) {
    skip_space();
    const std::size_t start = pos_;
    if (consume_word("inf")) {
      if (context != ValueContext::Height) throw ParseError("'inf' is only valid in height sequences", start);
      return {true, 0};
    }
    if (consume_word("*")) {
      if (context != ValueContext::NPlusEntry) throw ParseError("'*' is only valid in Postnikov descriptors", start);
      return {true, 0};
    }
    return {false, number()};
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct RawSequence {
  RawValue default_value;
  std::map<Prime, RawValue> entries;
};

RawSequence parse_raw(std::string_view text, ValueContext context) {
  Scanner in(text);
  RawSequence out;
  in.expect('{');
  if (!in.consume_word("default")) in.fail("expected 'default'");
  in.expect(':');
  out.default_value = in.value(context);
  std::optional<Prime> last;
  while (in.peek(',')) {
    in.expect(',');
    in.skip_space();
    const std::size_t key_pos = in.position();
    const std::uint64_t key = in.number();
    if (!is_prime(key)) throw ParseError(std::to_string(key) + " is not prime", key_pos);
    if (last && key <= *last) {
      throw ParseError(key == *last ? "duplicate prime " + std::to_string(key)
                                    : "primes must be strictly increasing",
                       key_pos);
    }
    last = key;
    in.expect(':');
    out.entries.emplace(key, in.value(context));
  }
  in.expect('}');
  if (!in.at_end()) in.fail("trailing characters");
  return out;
}

Val to_val(const RawValue& v) { return v.special ? Val::infinity() : Val::finite(v.number); }
NPlus to_nplus(const RawValue& v) { return v.special ? NPlus::star() : NPlus::of(v.number); }

template <typename Entry>
std::string sequence_text(const Entry& default_entry, const std::map<Prime, Entry>& exceptions) {
  std::string out = "{default:" + default_entry.to_string();
  for (const auto& [p, v] : exceptions) out += ", " + std::to_string(p) + ":" + v.to_string();
  return out + "}";
}

std::string prime_list(const std::set<Prime>& primes, char open, char close) {
  std::string out(1, open);
  bool first = true;
  for (const Prime p : primes) {
    if (!first) out += ", ";
    out += std::to_string(p);
    first = false;
  }
  return out + close;
}

}  // namespace

HeightSequence parse_heights(std::string_view text) {
  const RawSequence raw = parse_raw(text, ValueContext::Height);
  std::map<Prime, Val> exceptions;
  for (const auto& [p, v] : raw.entries) exceptions.emplace(p, to_val(v));
  return HeightSequence(to_val(raw.default_value), std::move(exceptions));
}

NPlusSequence parse_nplus(std::string_view text) {
  const RawSequence raw = parse_raw(text, ValueContext::NPlusEntry);
  std::map<Prime, NPlus> exceptions;
  for (const auto& [p, v] : raw.entries) exceptions.emplace(p, to_nplus(v));
  return NPlusSequence(to_nplus(raw.default_value), std::move(exceptions));
}

PostnikovGenusDescriptor parse_descriptor(std::string_view text, unsigned dimension) {
  return PostnikovGenusDescriptor(dimension, parse_nplus(text));
}

std::string to_text(const HeightSequence& h) { return sequence_text(h.default_height(), h.exceptions()); }
std::string to_text(const NPlusSequence& k) { return sequence_text(k.default_entry(), k.exceptions()); }
std::string to_text(const PostnikovGenusDescriptor& k) { return to_text(k.entries()); }

std::string to_text(const TypeClass& t) {
  if (t.default_height.is_finite()) {
    return "{default:" + t.default_height.to_string() + ", infinite:" + prime_list(t.infinite_primes, '[', ']') + "}";
  }
  return "{default:inf, finite:" + prime_list(t.finite_primes, '[', ']') + "}";
}

std::string to_text(const TorsionShape& s) {
  if (!s.cofinite()) return prime_list(s.primes(), '{', '}');
  if (s.primes().empty()) return "all";
  return "all except " + prime_list(s.primes(), '{', '}');
}

}  // namespace locgenus
