#include "steinberg/cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "steinberg/cache.hpp"
#include "steinberg/render.hpp"

namespace steinberg {

namespace {

std::vector<int> parse_index_list(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string("cannot parse ") + what + " '" + s + "'");
    }
  }
  return out;
}

Weight parse_lambda(const RootSystem& rs, const std::string& s) {
  if (s.empty()) return zero_weight(rs);
  std::vector<int> v = parse_index_list(s, "lambda");
  if (static_cast<int>(v.size()) != rs.rank())
    throw ValidationError("lambda must have " + std::to_string(rs.rank()) + " coordinates");
  Weight w;
  w.coords.assign(v.begin(), v.end());
  return w;
}

struct CacheSession {
  std::optional<std::string> path;
  KLStore open(const RootSystemPtr& rs) const {
    if (path && std::filesystem::exists(*path)) return cache_load(*path, rs);
    return KLStore(rs);
  }
  void close(const KLStore& store) const {
    if (path) cache_save(store, *path);
  }
};

// Subword-property Bruhat test on the canonical reduced word of y; the
// independent cross-check for the lifting recursion in `verify --suite kl`.
bool subword_bruhat(const WeylElem& x, const WeylElem& y) {
  std::vector<int> word = to_word(y);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> bool {
    if (remaining == 0) return from_word(y.root_system(), chosen) == x;
    if (word.size() - pos < static_cast<std::size_t>(remaining)) return false;
    chosen.push_back(word[pos]);
    bool hit = self(self, pos + 1, remaining - 1);
    chosen.pop_back();
    return hit || self(self, pos + 1, remaining);
  };
  return rec(rec, 0, x.length());
}

struct CheckSink {
  std::ostream& out;
  bool ok = true;
  void pass(const std::string& line) { out << "ok   " << line << "\n"; }
  void fail(const std::string& line) {
    ok = false;
    out << "FAIL " << line << "\n";
  }
  void check(bool good, const std::string& line) { good ? pass(line) : fail(line); }
};

void run_verify_euler(const RootSystemPtr& rs, const Weight& lambda, KLStore& store,
                      const SizeGuard& guard, CheckSink& sink) {
  for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
    VerifyReport r = verify_tits_euler(rs, I, lambda, store, guard);
    std::string line = "euler I=" + render_subset(I);
    if (r.ok) {
      sink.pass(line);
    } else {
      for (const std::string& v : r.violations) sink.fail(line + ": " + v);
    }
  }
}

void run_verify_smooth(const RootSystemPtr& rs, const Weight& lambda, KLStore& store,
                       const SizeGuard& guard, CheckSink& sink) {
  for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
    VerifyReport r = verify_smooth_complex(rs, I, lambda, store, guard);
    std::string line = "smooth I=" + render_subset(I);
    if (r.ok) {
      sink.pass(line);
    } else {
      for (const std::string& v : r.violations) sink.fail(line + ": " + v);
    }
  }
}

void run_verify_support(const RootSystemPtr& rs, KLStore& store, const SizeGuard& guard,
                        CheckSink& sink) {
  std::uint64_t checked = 0;
  bool ok = true;
  for (const WeylElem& w : enumerate_group(rs, guard)) {
    SimpleSubset supp = support(w);
    for (SimpleSubset J : subsets_between(SimpleSubset::empty(), i_max(w))) {
      bool positive = steinberg_multiplicity(w, J, store, guard) > 0;
      ok = ok && (positive == J.subset_of(supp));
      ++checked;
    }
  }
  sink.check(ok, "support law (multiplicity > 0 iff J in supp(w)): " + std::to_string(checked) +
                     " cases");
}

void run_verify_coxeter(const RootSystemPtr& rs, const SizeGuard& guard, CheckSink& sink) {
  std::uint64_t checked = 0;
  bool ok = true;
  for (const WeylElem& w : enumerate_group(rs, guard)) {
    SimpleSubset supp = support(w);
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
      ok = ok && (coxeter_criterion(I, w) == I.subset_of(supp));
      ++checked;
    }
  }
  sink.check(ok, "coxeter criterion (element below w iff I in supp(w)): " +
                     std::to_string(checked) + " cases");
}

void run_verify_kl(const RootSystemPtr& rs, KLStore& store, const SizeGuard& guard,
                   CheckSink& sink) {
  std::vector<WeylElem> all = enumerate_group(rs, guard);
  bool bounds_ok = true, symmetry_ok = true, bruhat_ok = true, dihedral_ok = true;
  std::uint64_t pairs = 0;
  for (const WeylElem& y : all) {
    for (const WeylElem& x : all) {
      bool leq = bruhat_leq(x, y);
      bruhat_ok = bruhat_ok && (leq == subword_bruhat(x, y));
      if (!leq) continue;
      ++pairs;
      KLPoly p = kl_polynomial(x, y, store);
      bounds_ok = bounds_ok && p.coeff(0) == 1;
      if (x.length() < y.length())
        bounds_ok = bounds_ok && p.degree() <= (y.length() - x.length() - 1) / 2;
      symmetry_ok = symmetry_ok && p == kl_polynomial(inverse(x), inverse(y), store);
      if (rs->rank() <= 2) dihedral_ok = dihedral_ok && p == KLPoly::one();
    }
  }
  sink.check(bounds_ok, "kl constant term and degree bound: " + std::to_string(pairs) + " pairs");
  sink.check(symmetry_ok, "kl inverse symmetry P_{x,y} = P_{x^-1,y^-1}");
  sink.check(bruhat_ok, "bruhat lifting recursion matches the subword property");
  if (rs->rank() <= 2) sink.check(dihedral_ok, "dihedral triviality: every P_{x,y} = 1");
}

struct Options {
  std::string type;
  std::string lambda;
  std::string parabolic;
  std::string twist;
  std::string K;
  std::string I;
  std::string x, y;
  std::string format = "table";
  std::string suite = "all";
  std::string cache;
  bool unguarded = false;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  RootSystemPtr rs = build_root_system(opt.type);
  SizeGuard guard = opt.unguarded ? SizeGuard::unlimited() : SizeGuard::defaults();
  CacheSession cache{opt.cache.empty() ? std::nullopt : std::optional<std::string>(opt.cache)};

  if (command == "count") {
    SimpleSubset I = SimpleSubset::of(parse_index_list(opt.I, "subset"), rs->rank());
    out << parabolic_class_count(rs, I, guard) << "\n";
    return 0;
  }

  if (command == "kl") {
    WeylElem x = from_word(rs, parse_index_list(opt.x, "word"));
    WeylElem y = from_word(rs, parse_index_list(opt.y, "word"));
    KLStore store = cache.open(rs);
    KLPoly p = kl_polynomial(x, y, store);
    if (opt.format == "json") {
      nlohmann::ordered_json doc;
      doc["type"] = rs->type().to_string();
      doc["rank"] = rs->rank();
      doc["x"] = to_word(x);
      doc["y"] = to_word(y);
      doc["coeffs"] = p.coeffs();
      doc["at_q_1"] = p.eval_at_one();
      out << doc.dump(1) << "\n";
    } else {
      out << "P_{" << render_word(to_word(x)) << "," << render_word(to_word(y))
          << "} = " << render_poly(p) << "\n";
    }
    cache.close(store);
    return 0;
  }

  if (command == "jh" || command == "induced") {
    Weight lambda = parse_lambda(*rs, opt.lambda);
    WeylElem w = from_word(rs, parse_index_list(opt.twist, "word"));
    SimpleSubset I = command == "jh"
                         ? SimpleSubset::of(parse_index_list(opt.parabolic, "subset"), rs->rank())
                         : SimpleSubset::of(parse_index_list(opt.K, "subset"), rs->rank());
    KLStore store = cache.open(rs);
    FactorMultiset m;
    if (command == "induced") {
      m = jh_induced(I, w, lambda, store, guard);
    } else if (I.is_empty() && w.is_identity()) {
      m = jh_steinberg(rs, lambda, store, guard);  // closed formula
    } else {
      m = jh_generalized_steinberg(I, w, lambda, store, guard);
    }
    RenderContext ctx{rs, lambda, I, to_word(w)};
    if (opt.format == "json")
      out << multiset_to_json(ctx, m).dump(1) << "\n";
    else
      out << multiset_to_table(ctx, m);
    cache.close(store);
    return 0;
  }

  // verify
  Weight lambda = parse_lambda(*rs, opt.lambda);
  KLStore store = cache.open(rs);
  CheckSink sink{out};
  bool all = opt.suite == "all";
  if (all || opt.suite == "euler") run_verify_euler(rs, lambda, store, guard, sink);
  if (all || opt.suite == "smooth") run_verify_smooth(rs, lambda, store, guard, sink);
  if (all || opt.suite == "support") run_verify_support(rs, store, guard, sink);
  if (all || opt.suite == "coxeter") run_verify_coxeter(rs, guard, sink);
  if (all || opt.suite == "kl") run_verify_kl(rs, store, guard, sink);
  cache.close(store);
  if (!sink.ok) throw InternalInconsistencyError("verification failed");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan-Hoelder factors of locally analytic Steinberg representations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_cache) {
    cmd->add_option("--type", opt.type, "Cartan type, e.g. A3, B2, G2")->required();
    if (with_cache) {
      cmd->add_option("--cache", opt.cache, "path of the persistent KL cache");
      cmd->add_flag("--unguarded", opt.unguarded, "disable the element-count size guard");
    }
  };

  CLI::App* jh = app.add_subcommand("jh", "Jordan-Hoelder series of a Steinberg representation");
  add_common(jh, true);
  jh->add_option("--lambda", opt.lambda, "dominant weight, comma-separated (default 0)");
  jh->add_option("--parabolic", opt.parabolic, "subset I, comma-separated indices (default {})");
  jh->add_option("--twist", opt.twist, "twist word w, comma-separated letters (default e)");
  jh->add_option("--format", opt.format, "table|json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* induced = app.add_subcommand("induced", "Jordan-Hoelder series of an induced representation");
  add_common(induced, true);
  induced->add_option("--K", opt.K, "parabolic subset K (empty string for the Borel)")->required();
  induced->add_option("--lambda", opt.lambda, "dominant weight (default 0)");
  induced->add_option("--twist", opt.twist, "twist word w (default e)");
  induced->add_option("--format", opt.format, "table|json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* kl = app.add_subcommand("kl", "one Kazhdan-Lusztig polynomial");
  add_common(kl, true);
  kl->add_option("--x", opt.x, "word of x (empty string for e)")->required();
  kl->add_option("--y", opt.y, "word of y (empty string for e)")->required();
  kl->add_option("--format", opt.format, "table|json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* count = app.add_subcommand("count", "|W^I_p|: elements whose maximal parabolic is I");
  add_common(count, false);
  count->add_option("--I", opt.I, "subset I (empty string allowed)")->required();
  count->add_flag("--unguarded", opt.unguarded, "disable the element-count size guard");

  CLI::App* verify = app.add_subcommand("verify", "run consistency suites");
  add_common(verify, true);
  verify->add_option("--suite", opt.suite, "all|euler|smooth|support|coxeter|kl")
      ->check(CLI::IsMember({"all", "euler", "smooth", "support", "coxeter", "kl"}));
  verify->add_option("--lambda", opt.lambda, "dominant weight for euler/smooth (default 0)");

  std::vector<const char*> argv;
  argv.push_back("steinberg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error:1:" << e.what() << "\n";
    return 1;
  }

  try {
    std::string command = app.get_subcommands().front()->get_name();
    return dispatch(command, opt, out);
  } catch (const CoefficientOverflowError& e) {
    err << "error:3:" << e.what() << "\n";
    return 3;
  } catch (const InternalInconsistencyError& e) {
    err << "error:4:" << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    err << "error:2:" << e.what() << "\n";
    return 2;
  } catch (const Error& e) {  // IoError, FormatError
    err << "error:2:" << e.what() << "\n";
    return 2;
  }
}

}  // namespace steinberg
