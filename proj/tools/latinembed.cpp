// latinembed: command-line front end for the latin library.
//
// Exit codes: 0 success, 1 input or validation failure, 2 usage error,
// 3 internal invariant violation (a repro dump goes to stderr).

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latin/completion.hpp"
#include "latin/constructions.hpp"
#include "latin/error.hpp"
#include "latin/finite_field.hpp"
#include "latin/io.hpp"
#include "latin/mols_gen.hpp"
#include "latin/verify.hpp"

namespace fs = std::filesystem;
using namespace latin;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

// Failure bookkeeping: the stage currently running and every input read,
// for diagnostics and the repro dump.
struct Context {
  std::string stage = "startup";
  std::vector<std::string> argv;
  std::vector<std::pair<std::string, std::string>> inputs;
};
Context ctx;

struct Options {
  bool no_verify = false;
  bool timings = false;
  unsigned threads = 0;
};
Options global;

// A failed check on data the user handed in; exits with code 1.
struct ValidationFailure : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  ctx.stage = "read " + path;
  auto text = io::read_file(path);
  ctx.inputs.emplace_back(path, text);
  return text;
}

template <class T, class Fn>
T parse_input(const std::string& path, Fn parse) {
  const auto text = read_input(path);
  ctx.stage = "parse " + path;
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

LatinSquare load_latin(const std::string& path) {
  auto l = parse_input<LatinSquare>(path, io::parse_latin);
  if (auto rep = is_latin(l); !rep.ok()) throw ValidationFailure(path + " is not a latin square: " + rep.describe());
  return l;
}

MolsSet load_mols(const std::string& path) { return parse_input<MolsSet>(path, io::parse_mols); }

void write_output(const std::string& path, std::string_view content) {
  ctx.stage = "write " + path;
  io::write_file(path, content);
}

// Reruns the full verifier on a construction's output. A failure here means a
// library bug, so it is an invariant violation rather than a user error.
CertificationReport verify_output(const MolsSet& set, const char* what) {
  ctx.stage = std::string("verify ") + what;
  auto report = verify_mols(set, {global.threads});
  if (!report.certified) {
    throw InvariantViolation(std::string(what) + " failed verification:\n" + io::emit_report(report));
  }
  return report;
}

void prepare_dir(const std::string& dir) {
  ctx.stage = "create " + dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "': " + ec.message());
}

std::string numbered(const char* prefix, std::size_t i, std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::string num = std::to_string(i);
  return prefix + std::string(width > num.size() ? width - num.size() : 0, '0') + num + ".txt";
}

// Directory output with a manifest listing files in construction order.
class OutDir {
 public:
  explicit OutDir(std::string dir, std::string command) : dir_(std::move(dir)) {
    prepare_dir(dir_);
    manifest_ = "manifest " + command + "\n";
  }

  void property(const std::string& key, const std::string& value) { manifest_ += key + " " + value + "\n"; }

  void file(const std::string& name, const std::string& role, std::string_view content) {
    write_output((fs::path(dir_) / name).string(), content);
    manifest_ += "file " + name + " " + role + "\n";
  }

  void finish() { write_output((fs::path(dir_) / "manifest.txt").string(), manifest_); }

 private:
  std::string dir_;
  std::string manifest_;
};

std::string report_text(const MolsSet& set, std::vector<std::pair<std::string, bool>> witnesses) {
  io::ReportExtras extras;
  extras.witnesses = std::move(witnesses);
  extras.timings = global.timings;
  if (global.no_verify) {
    return "report order " + std::to_string(set.order()) + " squares " + std::to_string(set.size()) +
           "\nverification skipped (--no-verify)\n";
  }
  return io::emit_report(verify_output(set, "output set"), extras);
}

void note_small_order(std::size_t n) {
  if (n < 3) {
    std::cerr << "note: source order " << n
              << " is below 3; the sizing rule still applies but this case is outside the usual statement\n";
  }
}

std::vector<std::uint32_t> parse_perm_spec(const std::string& spec, std::size_t size) {
  std::vector<std::uint32_t> perm;
  if (spec.empty() || spec == "identity") return perm;
  if (spec == "reverse") {
    for (std::size_t i = size; i-- > 0;) perm.push_back(static_cast<std::uint32_t>(i));
    return perm;
  }
  if (spec.rfind("shift:", 0) == 0) {
    std::size_t k = 0;
    const auto tail = spec.substr(6);
    const auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec != std::errc() || p != tail.data() + tail.size()) throw CLI::ValidationError("--f", "bad shift amount");
    for (std::size_t i = 0; i < size; ++i) perm.push_back(static_cast<std::uint32_t>((i + k) % size));
    return perm;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) {
      throw CLI::ValidationError("--f", "'" + item + "' is not a non-negative integer");
    }
    perm.push_back(v);
  }
  return perm;
}

// ---- subcommands -----------------------------------------------------------

struct GenMolsArgs {
  std::uint64_t q = 0;
  std::string out;
};

int run_gen_mols(const GenMolsArgs& a) {
  ctx.stage = "generate";
  const auto set = gen_mols_prime_power(a.q);
  if (!global.no_verify) verify_output(set, "generated set");
  write_output(a.out, io::emit_mols(set));
  std::cout << "wrote " << set.size() << " MOLS of order " << set.order() << " to " << a.out << "\n";
  return 0;
}

struct CompleteArgs {
  std::string in;
  std::size_t order = 0;
  bool idempotent = false;
  std::string out;
};

int run_complete(const CompleteArgs& a) {
  const auto p = parse_input<PartialLatinSquare>(a.in, io::parse_partial);
  ctx.stage = a.idempotent ? "idempotent completion" : "completion";
  const auto l = a.idempotent ? idempotent_complete(p, a.order) : evans_complete(p, a.order);
  if (!global.no_verify) {
    ctx.stage = "verify completion";
    if (auto rep = is_latin(l); !rep.ok()) throw InvariantViolation("completion is not latin: " + rep.describe());
    if (!check_embedding(p, l, EmbeddingWitness::identity(p.order(), l.order()))) {
      throw InvariantViolation("completion does not contain the input");
    }
    if (a.idempotent && !is_idempotent(l)) throw InvariantViolation("completion is not idempotent");
  }
  write_output(a.out, io::emit_grid(l));
  std::cout << "completed order " << p.order() << " into order " << l.order() << ", wrote " << a.out << "\n";
  return 0;
}

struct EmbedSquareArgs {
  std::string in;
  bool idempotent = false;
  std::string pipeline = "auto";
  std::string out_dir;
};

int run_embed_square(const EmbedSquareArgs& a) {
  const auto grid = parse_input<io::Grid>(a.in, io::parse_grid);
  const auto p = std::visit(
      [](const auto& g) -> PartialLatinSquare {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, LatinSquare>) {
          if (auto rep = is_latin(g); !rep.ok()) throw ValidationFailure("input is not latin: " + rep.describe());
          return PartialLatinSquare::from_square(g);
        } else {
          return g;
        }
      },
      grid);
  const std::size_t n = p.order();
  note_small_order(n);

  // The direct route needs a full square of a prime-power order in the field
  // table; everything else goes through completion.
  const auto full = p.as_latin();
  const auto [pp, kk] = prime_power_decompose(n);
  bool direct = false;
  if (a.pipeline == "square") {
    if (!full) throw ValidationFailure("--pipeline square needs a full latin square");
    if (a.idempotent) throw ValidationFailure("--pipeline square does not support --idempotent");
    direct = true;
  } else if (a.pipeline == "auto") {
    const auto& table = modulus_table();
    const bool in_table = std::any_of(table.begin(), table.end(), [&](const ModulusEntry& e) {
      return e.p == pp && e.k == kk;
    });
    direct = full && !a.idempotent && in_table;
  }

  SquareEmbedResult result;
  std::optional<LatinSquare> completed;
  std::size_t m = n;
  if (direct) {
    ctx.stage = "generate field MOLS";
    const auto f = gen_mols_prime_power(n);
    ctx.stage = "square embedding";
    result = square_embed(*full, f);
  } else {
    ctx.stage = "embed partial square";
    auto e = embed_pls_with_mates(p, a.idempotent);
    result = std::move(e.result);
    completed = std::move(e.completed);
    m = e.m;
  }

  std::vector<LatinSquare> all{result.host};
  all.insert(all.end(), result.mates.begin(), result.mates.end());
  const MolsSet set(std::move(all));

  std::vector<std::pair<std::string, bool>> witnesses;
  if (!global.no_verify) {
    ctx.stage = "verify witness";
    const bool ok = check_embedding(p, result.host, result.witness);
    if (!ok) throw InvariantViolation("embedding witness does not validate");
    witnesses.emplace_back("source_in_host", ok);
    if (a.idempotent) {
      if (!is_idempotent(result.host)) throw InvariantViolation("host is not idempotent");
      witnesses.emplace_back("host_idempotent", true);
    }
  }
  const auto report = report_text(set, witnesses);

  OutDir out(a.out_dir, "embed-square");
  out.property("pipeline", direct ? "square" : "partial");
  out.property("source_order", std::to_string(n));
  out.property("completed_order", std::to_string(m));
  out.property("host_order", std::to_string(result.host.order()));
  out.property("mates", std::to_string(result.mates.size()));
  out.property("idempotent", a.idempotent ? "yes" : "no");
  if (n < 3) out.property("note", "source order below 3");
  if (completed) out.file("completed.txt", "completion", io::emit_grid(*completed));
  out.file("host.txt", "host", io::emit_grid(result.host));
  for (std::size_t k = 0; k < result.mates.size(); ++k) {
    out.file(numbered("mate_", k + 1, result.mates.size()), "mate " + std::to_string(k + 1),
             io::emit_grid(result.mates[k]));
  }
  out.file("witness.txt", "witness", io::emit_witness(result.witness));
  out.file("all.mols", "mols", io::emit_mols(set));
  out.file("report.txt", "report", report);
  out.finish();
  std::cout << "host order " << result.host.order() << " with " << result.mates.size() << " mates, wrote "
            << a.out_dir << "\n";
  return 0;
}

struct EmbedPairArgs {
  std::string a1, a2, d1, d2, c;
  std::string f;
  std::string out_dir;
};

int run_embed_pair(const EmbedPairArgs& a) {
  PairEmbedInputs in{load_latin(a.a1), load_latin(a.a2), load_latin(a.d1), load_latin(a.d2), load_mols(a.c), {}};
  in.f = parse_perm_spec(a.f, in.c.size());
  note_small_order(in.a1.order());
  ctx.stage = "pair embedding";
  const auto res = pair_embed(in);

  std::vector<std::pair<std::string, bool>> witnesses;
  if (!global.no_verify) {
    ctx.stage = "verify witnesses";
    const bool w1 = check_embedding(PartialLatinSquare::from_square(in.d1), res.squares[0], res.witness_d1);
    const bool w2 = check_embedding(PartialLatinSquare::from_square(in.d2), res.squares[1], res.witness_d2);
    if (!w1 || !w2) throw InvariantViolation("pair embedding witnesses do not validate");
    witnesses = {{"d1_in_b1", w1}, {"d2_in_b2", w2}};
  }
  const auto report = report_text(res.squares, witnesses);

  OutDir out(a.out_dir, "embed-pair");
  out.property("order", std::to_string(res.squares.order()));
  out.property("squares", std::to_string(res.squares.size()));
  out.file("b1.txt", "b1", io::emit_grid(res.squares[0]));
  out.file("b2.txt", "b2", io::emit_grid(res.squares[1]));
  const std::size_t t = res.squares.size() - 2;
  for (std::size_t i = 0; i < t; ++i) {
    out.file(numbered("x_", i + 1, t), "x " + std::to_string(i + 1), io::emit_grid(res.squares[i + 2]));
  }
  out.file("witness_d1.txt", "witness d1", io::emit_witness(res.witness_d1));
  out.file("witness_d2.txt", "witness d2", io::emit_witness(res.witness_d2));
  out.file("all.mols", "mols", io::emit_mols(res.squares));
  out.file("report.txt", "report", report);
  out.finish();
  std::cout << res.squares.size() << " MOLS of order " << res.squares.order() << ", wrote " << a.out_dir << "\n";
  return 0;
}

struct InOutArgs {
  std::string in;
  std::string out;
};

int run_amplify(const InOutArgs& a) {
  const auto s = load_mols(a.in);
  ctx.stage = "amplify";
  const auto out = amplify(s);
  if (!global.no_verify) verify_output(out, "amplified set");
  write_output(a.out, io::emit_mols(out));
  std::cout << s.size() << " MOLS of order " << s.order() << " -> " << out.size() << " MOLS of order "
            << out.order() << ", wrote " << a.out << "\n";
  return 0;
}

struct Build576Args {
  std::string mols24;
  std::string out;
};

int run_build_576(const Build576Args& a) {
  std::optional<MolsSet> input;
  if (!a.mols24.empty()) input = load_mols(a.mols24);
  ctx.stage = input ? "build from supplied MOLS(24)" : "build from MacNeish MOLS(24)";
  const auto out = build_576(input);
  if (!global.no_verify) {
    const auto rep = verify_output(out, "MOLS(576)");
    if (global.timings) {
      std::cout << "verification " << std::chrono::duration<double, std::milli>(rep.elapsed).count() << " ms\n";
    }
  }
  write_output(a.out, io::emit_mols(out));
  std::cout << out.size() << " MOLS of order " << out.order() << ", wrote " << a.out << "\n";
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> in;
  std::string report;
  std::string witness;
  std::string source;
};

int run_verify(const VerifyArgs& a) {
  std::vector<LatinSquare> squares;
  for (const auto& path : a.in) {
    const auto text = read_input(path);
    ctx.stage = "parse " + path;
    try {
      if (text.rfind("mols", 0) == 0) {
        const auto s = io::parse_mols(text);
        squares.insert(squares.end(), s.begin(), s.end());
      } else {
        squares.push_back(io::parse_latin(text));
      }
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
  }
  ctx.stage = "collect squares";
  for (const auto& s : squares) {
    if (s.order() != squares.front().order()) throw ValidationFailure("input squares have different orders");
  }
  const MolsSet set(std::move(squares));

  std::vector<std::pair<std::string, bool>> witnesses;
  if (!a.witness.empty()) {
    const auto w = parse_input<EmbeddingWitness>(a.witness, io::parse_witness);
    const auto src = parse_input<PartialLatinSquare>(a.source, io::parse_partial);
    ctx.stage = "check witness";
    witnesses.emplace_back("source_in_first", check_embedding(src, set[0], w));
  }

  ctx.stage = "verify";
  const auto rep = verify_mols(set, {global.threads});
  io::ReportExtras extras;
  extras.witnesses = witnesses;
  extras.timings = global.timings;
  const auto text = io::emit_report(rep, extras);
  if (a.report.empty() || a.report == "-") {
    std::cout << text;
  } else {
    write_output(a.report, text);
  }

  bool ok = rep.certified;
  for (std::size_t i = 0; i < rep.squares.size(); ++i) {
    if (!rep.squares[i].ok()) std::cerr << "square " << i << " not latin: " << rep.squares[i].describe() << "\n";
  }
  for (const auto& pc : rep.pairs) {
    if (!pc.report.ok()) {
      std::cerr << "pair " << pc.first << " " << pc.second << " not orthogonal: " << pc.report.describe() << "\n";
    }
  }
  for (const auto& [name, good] : witnesses) {
    if (!good) std::cerr << "witness " << name << " does not validate\n";
    ok = ok && good;
  }
  std::cout << (ok ? "certified" : "not certified") << ": " << set.size() << " squares of order " << set.order()
            << "\n";
  return ok ? 0 : kExitValidation;
}

struct ProductArgs {
  std::string a, b, out;
};

int run_product(const ProductArgs& a) {
  const auto x = load_mols(a.a);
  const auto y = load_mols(a.b);
  ctx.stage = "MacNeish product";
  const auto out = macneish_product(x, y);
  if (!global.no_verify) verify_output(out, "product set");
  write_output(a.out, io::emit_mols(out));
  std::cout << out.size() << " MOLS of order " << out.order() << ", wrote " << a.out << "\n";
  return 0;
}

struct InfoArgs {
  std::vector<std::uint32_t> field;
  bool formats = false;
};

int run_info(const InfoArgs& a) {
  if (a.formats) {
    std::cout << io::formats_help();
    return 0;
  }
  ctx.stage = "field lookup";
  const auto f = FiniteField::make(a.field[0], a.field[1]);
  std::cout << "field GF(" << f.characteristic() << "^" << f.degree() << ")\n"
            << "size " << f.size() << "\n"
            << "modulus " << f.modulus_string() << "\n"
            << "generator " << f.generator() << "\n"
            << "multipliers";
  for (auto m : mols_multipliers(f)) std::cout << " " << m;
  std::cout << "\n";
  return 0;
}

void repro_dump(const std::exception& e) {
  std::cerr << "---- repro ----\ncommand:";
  for (const auto& a : ctx.argv) std::cerr << " " << a;
  std::cerr << "\nstage: " << ctx.stage << "\nerror: " << e.what() << "\n";
  for (const auto& [path, text] : ctx.inputs) {
    std::cerr << "input " << path << " (" << text.size() << " bytes)\n";
    if (text.size() <= 1 << 16) std::cerr << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }
  std::cerr << "---- end repro ----\n";
}

}  // namespace

int main(int argc, char** argv) {
  ctx.argv.assign(argv, argv + argc);

  CLI::App app{"Embed latin squares into squares with many orthogonal mates, and build and verify MOLS."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("\n" + io::formats_help());
  app.add_flag("--no-verify", global.no_verify,
               "Skip the final verification of constructed outputs (for timing experiments only)");
  app.add_flag("--timings", global.timings, "Include timings in reports");
  app.add_option("--threads", global.threads, "Worker threads for pair checks (0 = hardware concurrency)");

  auto formats_footer = [](CLI::App* sub) { sub->footer("\n" + io::formats_help()); };

  GenMolsArgs gen_args;
  auto* gen = app.add_subcommand("gen-mols", "Write the q-1 field MOLS of a prime power order q");
  gen->add_option("--q", gen_args.q, "Prime power order")->required()->check(CLI::Range(2, 1 << 16));
  gen->add_option("--out", gen_args.out, "Output mols file")->required();
  formats_footer(gen);

  CompleteArgs comp_args;
  auto* comp = app.add_subcommand("complete", "Complete a partial square of order n into a latin square of order t");
  comp->add_option("--in", comp_args.in, "Input grid file (partial or latin)")->required();
  comp->add_option("--order", comp_args.order, "Target order t (t >= 2n, or t >= 2n+1 with --idempotent)")
      ->required();
  comp->add_flag("--idempotent", comp_args.idempotent, "Produce an idempotent square");
  comp->add_option("--out", comp_args.out, "Output grid file")->required();
  formats_footer(comp);

  EmbedSquareArgs es_args;
  auto* es = app.add_subcommand("embed-square", "Embed a (partial) square into a host with orthogonal mates");
  es->add_option("--in", es_args.in, "Input grid file (partial or latin)")->required();
  es->add_flag("--idempotent", es_args.idempotent, "Make the host idempotent (input must be compatible)");
  es->add_option("--pipeline", es_args.pipeline,
                 "auto: full squares of prime-power order embed directly (host n^2), others are completed "
                 "first; square: force the direct route; partial: force completion")
      ->check(CLI::IsMember({"auto", "square", "partial"}));
  es->add_option("--out-dir", es_args.out_dir, "Output directory")->required();
  formats_footer(es);

  EmbedPairArgs ep_args;
  auto* ep = app.add_subcommand("embed-pair", "Build |c|+2 MOLS of order n^2 containing the pair (d1, d2)");
  ep->add_option("--a1", ep_args.a1, "Latin grid file, orthogonal to a2")->required();
  ep->add_option("--a2", ep_args.a2, "Latin grid file")->required();
  ep->add_option("--d1", ep_args.d1, "Latin grid file, orthogonal to d2; lands in b1")->required();
  ep->add_option("--d2", ep_args.d2, "Latin grid file; lands in b2")->required();
  ep->add_option("--c", ep_args.c, "Mols file of order n")->required();
  ep->add_option("--f", ep_args.f,
                 "Bijection on the squares of c: 'identity' (default), 'reverse', 'shift:k', or a comma list");
  ep->add_option("--out-dir", ep_args.out_dir, "Output directory")->required();
  formats_footer(ep);

  InOutArgs amp_args;
  auto* amp = app.add_subcommand("amplify", "Turn t >= 2 MOLS of order n into t+2 MOLS of order n^2");
  amp->add_option("--in", amp_args.in, "Input mols file")->required();
  amp->add_option("--out", amp_args.out, "Output mols file")->required();
  formats_footer(amp);

  Build576Args b_args;
  auto* b576 = app.add_subcommand("build-576", "Build MOLS of order 576 from MOLS of order 24");
  b576->add_option("--mols24", b_args.mols24,
                   "Mols file of order 24; without it the MacNeish product of GF(8) and GF(3) is used");
  b576->add_option("--out", b_args.out, "Output mols file")->required();
  formats_footer(b576);

  VerifyArgs v_args;
  auto* ver = app.add_subcommand("verify", "Certify latin-ness and pairwise orthogonality of the given squares");
  ver->add_option("--in", v_args.in, "Mols or latin grid files; all squares are checked as one set")
      ->required()
      ->expected(1, -1);
  ver->add_option("--report", v_args.report, "Report file ('-' or omitted for stdout)");
  auto* wopt = ver->add_option("--witness", v_args.witness, "Witness file to check against the first square");
  auto* sopt = ver->add_option("--source", v_args.source, "Source grid for --witness");
  wopt->needs(sopt);
  sopt->needs(wopt);
  formats_footer(ver);

  ProductArgs p_args;
  auto* prod = app.add_subcommand("product", "MacNeish product of two mols files");
  prod->add_option("--a", p_args.a, "First mols file")->required();
  prod->add_option("--b", p_args.b, "Second mols file")->required();
  prod->add_option("--out", p_args.out, "Output mols file")->required();
  formats_footer(prod);

  InfoArgs i_args;
  auto* info = app.add_subcommand("info", "Show a built-in field or describe the file formats");
  auto* fopt = info->add_option("--field", i_args.field, "Prime p and degree k")->expected(2);
  auto* fmt = info->add_flag("--formats", i_args.formats, "Describe the file formats");
  fopt->excludes(fmt);
  info->require_option(1);
  formats_footer(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return run_gen_mols(gen_args);
    if (*comp) return run_complete(comp_args);
    if (*es) return run_embed_square(es_args);
    if (*ep) return run_embed_pair(ep_args);
    if (*amp) return run_amplify(amp_args);
    if (*b576) return run_build_576(b_args);
    if (*ver) return run_verify(v_args);
    if (*prod) return run_product(p_args);
    if (*info) return run_info(i_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error [" << ctx.stage << "]: " << e.what() << "\n";
    repro_dump(e);
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error [" << ctx.stage << "]: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
