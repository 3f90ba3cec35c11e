#include "locgenus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <functional>
#include <ostream>

#include "locgenus/connecting.hpp"
#include "locgenus/error.hpp"
#include "locgenus/genus.hpp"
#include "locgenus/rankone.hpp"
#include "locgenus/text.hpp"

namespace locgenus::cli {

namespace {

using nlohmann::json;

// What a command produced: the plain-text lines and the same data as JSON.
struct Result {
  std::vector<std::string> lines;
  json data = json::object();
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

json prime_array(const std::set<Prime>& primes) { return json(std::vector<Prime>(primes.begin(), primes.end())); }

json type_json(const TypeClass& t) {
  json j;
  j["default"] = t.default_height.to_string();
  if (t.default_height.is_finite()) {
    j["infinite_primes"] = prime_array(t.infinite_primes);
  } else {
    j["finite_primes"] = prime_array(t.finite_primes);
  }
  return j;
}

json shape_json(const TorsionShape& s) {
  return {{"cofinite", s.cofinite()}, {"primes", prime_array(s.primes())}};
}

GenusFunctor parse_functor(const std::string& text) {
  if (text == "neisendorfer") return GenusFunctor::neisendorfer();
  constexpr std::string_view prefix = "postnikov:";
  if (text.starts_with(prefix)) {
    const std::string digits = text.substr(prefix.size());
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) {
      return GenusFunctor::postnikov(n);
    }
    throw ParseError("expected a section number after 'postnikov:'", prefix.size());
  }
  throw ParseError("functor must be 'neisendorfer' or 'postnikov:<N>'", 0);
}

PAdicApprox parse_padic(const std::string& text, Prime p, unsigned precision) {
  if (text == "zero") return PAdicApprox::exact_zero(p, precision);
  const Rat value = Rat::parse(text);
  if (!value.is_integer()) throw ParseError("expected an integer or 'zero'", 0);
  return PAdicApprox::from_integer(value.numerator(), p, precision);
}

struct Settings {
  bool as_json = false;
  unsigned precision = kDefaultPrecision;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  unsigned threads = 1;
};

void write(const Result& r, const Settings& s, std::ostream& out) {
  if (s.as_json) {
    out << r.data.dump() << '\n';
    return;
  }
  for (const auto& line : r.lines) out << line << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localization genus computations: rank-one types, rational and Postnikov genera"};
  app.name("locgenus");
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_flag("--json", settings.as_json, "Emit one JSON object instead of text lines");
  app.add_option("--precision", settings.precision, "p-adic precision in digits")->check(CLI::PositiveNumber);
  app.add_option("--prime-bound", settings.prime_bound, "Largest prime tried when factoring")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  app.add_option("--threads", settings.threads, "Workers for enumeration")->check(CLI::PositiveNumber);

  std::function<Result()> action;

  // type
  auto* type = app.add_subcommand("type", "Similarity types of height sequences");
  type->require_subcommand(1);
  std::string h1, h2;
  type->add_subcommand("canon", "Canonical type of a height sequence")
      ->callback([&] {
        action = [&] {
          const TypeClass t = type_of(parse_heights(h1));
          return Result{{to_text(t)}, {{"type", type_json(t)}}};
        };
      })
      ->add_option("heights", h1)->required();
  auto* sim = type->add_subcommand("similar", "Whether two height sequences are similar");
  sim->add_option("first", h1)->required();
  sim->add_option("second", h2)->required();
  sim->callback([&] {
    action = [&] {
      const bool s = similar(parse_heights(h1), parse_heights(h2));
      return Result{{bool_text(s)}, {{"similar", s}}};
    };
  });

  // group
  auto* group = app.add_subcommand("group", "Rank-one subgroups of Q containing Z");
  group->require_subcommand(1);
  std::string rational;
  auto* mem = group->add_subcommand("member", "Whether a rational lies in the group");
  mem->add_option("rational", rational)->required();
  mem->add_option("heights", h1)->required();
  mem->callback([&] {
    action = [&] {
      const bool m = member(Rat::parse(rational), RankOneGroup(parse_heights(h1)), settings.prime_bound);
      return Result{{bool_text(m)}, {{"member", m}}};
    };
  });
  auto* pseudo = group->add_subcommand("pseudo", "Whether the group is a group of pseudo-integers");
  pseudo->add_option("heights", h1)->required();
  pseudo->callback([&] {
    action = [&] {
      const bool b = is_pseudo_integers(RankOneGroup(parse_heights(h1)));
      return Result{{bool_text(b)}, {{"pseudo_integers", b}}};
    };
  });

  // genus
  auto* genus = app.add_subcommand("genus", "Genus sets of odd spheres and CP^n");
  genus->require_subcommand(1);
  unsigned dim = 0;
  std::string precompose = "1";
  auto* rat = genus->add_subcommand("rational", "Extended rationalization genus element of S^n");
  rat->add_option("heights", h1, "Kernel heights of the connecting map")->required();
  rat->add_option("--dim", dim, "Odd sphere dimension")->required();
  rat->add_option("--precompose", precompose, "Rational unit pre-composed with the connecting map");
  rat->callback([&] {
    action = [&] {
      const ConnectingHom hom = beta(RankOneGroup(parse_heights(h1))).precomposed(Rat::parse(precompose));
      const RationalGenusElement y(dim, hom);
      const TypeClass cls = classify_rational_genus(y, settings.prime_bound);
      const RationalHomotopy groups = homotopy_groups(y, settings.prime_bound);
      const bool connected = is_n_minus_1_connected(y, settings.prime_bound);
      Result r;
      r.lines = {"class: " + to_text(cls), "pi_n: " + to_text(groups.pi_n),
                 "pi_n-1: " + to_text(groups.pi_n_minus_1),
                 std::string("result: ") + (connected ? "" : "not ") + "(n-1)-connected"};
      r.data = {{"dimension", dim},
                {"class", type_json(cls)},
                {"pi_n", type_json(groups.pi_n)},
                {"pi_n_minus_1", shape_json(groups.pi_n_minus_1)},
                {"n_minus_1_connected", connected}};
      return r;
    };
  });

  auto* post = genus->add_subcommand("postnikov", "Extended n-th Postnikov genus of S^n");
  post->require_subcommand(1);
  unsigned cap = kDefaultFingerprintCap;
  auto* fp = post->add_subcommand("fingerprint", "Recover a descriptor from cohomology fingerprints");
  fp->add_option("descriptor", h1)->required();
  fp->add_option("--dim", dim, "Odd sphere dimension")->required();
  fp->add_option("--cap", cap, "Largest exponent probed per prime");
  fp->callback([&] {
    action = [&] {
      const FakeSphereModel y = assemble_global(dim, parse_descriptor(h1, dim));
      const PostnikovGenusDescriptor k = classify_postnikov_genus(y, cap);
      return Result{{to_text(k)}, {{"dimension", dim}, {"label", y.label()}, {"descriptor", to_text(k)}}};
    };
  });
  std::uint64_t primes_bound = 0;
  std::uint64_t max_entry = 0;
  auto* en = post->add_subcommand("enumerate", "List descriptors supported on small primes");
  en->add_option("--dim", dim, "Odd sphere dimension")->required();
  en->add_option("--primes", primes_bound, "Largest prime with a free entry")->required();
  en->add_option("--max", max_entry, "Largest finite entry")->required();
  en->callback([&] {
    action = [&] {
      const PostnikovEnumeration e = enumerate_postnikov_genus(dim, primes_bound, max_entry, settings.threads);
      Result r;
      json listing = json::array();
      for (const auto& k : e.descriptors) {
        r.lines.push_back(to_text(k));
        listing.push_back(to_text(k));
      }
      r.lines.push_back("count: " + std::to_string(e.count));
      r.data = {{"dimension", dim}, {"descriptors", listing}, {"count", e.count}};
      return r;
    };
  });

  unsigned cp_n = 0;
  auto* cp = genus->add_subcommand("cp", "Fake sphere pulled back from a fake CP^n");
  cp->add_option("--n", cp_n, "Complex dimension n >= 1")->required();
  cp->add_option("exponents", h1, "Degree exponents k_p with m_p = p^k_p; '*' for degree 0")->required();
  cp->callback([&] {
    action = [&] {
      const PostnikovGenusDescriptor k = cp_fake_descriptor(cp_n, parse_nplus(h1));
      return Result{{to_text(k)}, {{"dimension", k.dimension()}, {"descriptor", to_text(k)}}};
    };
  });

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic integers");
  padic->require_subcommand(1);
  Prime p = 2;
  std::string z;
  auto* cls = padic->add_subcommand("class", "N_+ class of a p-adic integer modulo units");
  cls->add_option("p", p)->required();
  cls->add_option("z", z, "Integer, or 'zero' for the exact zero")->required()->allow_extra_args(false);
  cls->callback([&] {
    action = [&] {
      const NPlus c = classifying_map_class(3, p, parse_padic(z, p, settings.precision));
      return Result{{c.to_string()}, {{"prime", p}, {"class", c.to_string()}}};
    };
  });

  // verdict
  std::string tag, functor = "neisendorfer";
  auto* verdict = app.add_subcommand("verdict", "Genus triviality verdict for a catalogued finite complex");
  verdict->add_option("complex", tag, "S<n>, CP<n>, S2xS5 or CP2xS3")->required();
  verdict->add_option("--functor", functor, "neisendorfer or postnikov:<N>");
  verdict->callback([&] {
    action = [&] {
      const GenusVerdict v = finite_complex_genus_verdict(lookup_complex(tag), parse_functor(functor));
      json j = {{"complex", v.complex}, {"verdict", v.to_string()}};
      if (v.witness) j["witness"] = *v.witness;
      return Result{{v.to_string()}, j};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    write(action(), settings, out);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse:
        return kParseFailure;
      case ErrorKind::Domain:
        return kDomainFailure;
      case ErrorKind::ResourceGuard:
        return kResourceGuard;
    }
    return kDomainFailure;
  }
}

}  // namespace locgenus::cli
