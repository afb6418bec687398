#include "moser/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "moser/bfile.hpp"
#include "moser/collinearity.hpp"
#include "moser/fixtures.hpp"
#include "moser/josephus.hpp"
#include "moser/lattice.hpp"
#include "moser/progressions.hpp"

namespace moser::cli {

namespace {

struct FamilyArgs {
  std::string name;
  u64 r = 2;
  u64 c = 3;
  u64 a = 1;
  u64 b = 1;

  SequenceFamily family() const {
    if (name == "moser") return moser_family(r);
    if (name == "s") return s_family(r);
    if (name == "shifted") return shifted_family(c);
    if (name == "affine") return affine_family(a, b);
    if (name == "t") return t_family();
    throw std::domain_error("unknown family: " + name);
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fam) {
  cmd->add_option("family", fam.name, "sequence family")
      ->required()
      ->check(CLI::IsMember({"moser", "s", "shifted", "affine", "t"}));
  cmd->add_option("--r", fam.r, "base for moser/s families");
  cmd->add_option("--c", fam.c, "odd shift for the shifted family");
  cmd->add_option("--a", fam.a, "affine offset");
  cmd->add_option("--b", fam.b, "affine step");
}

void print_terms(std::ostream& out, const std::vector<u64>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ' ';
    out << terms[i];
  }
  out << '\n';
}

int run_seq(std::ostream& out, const FamilyArgs& fam, u64 count, u64 offset,
            bool offset_given) {
  SequenceFamily family = fam.family();
  u64 first = family.first_index();
  if (!offset_given) offset = first;
  if (offset < first)
    throw std::domain_error("offset below the family's first index");
  u64 total = checked_add(offset - first, count);
  std::vector<u64> terms = family.prefix(total);
  terms.erase(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(offset - first));
  print_terms(out, terms);
  return 0;
}

int run_decompose(std::ostream& out, const FamilyArgs& fam, u64 n) {
  DecompositionPair pair = [&] {
    if (fam.name == "moser") return decompose_moser(n, fam.r);
    if (fam.name == "s") return decompose_s(n, fam.r);
    if (fam.name == "shifted") return decompose_shifted(n, fam.c);
    if (fam.name == "affine") return decompose_affine(n, fam.a, fam.b);
    throw std::domain_error(
        "the merged family has no unique decomposition; see `evens`");
  }();
  out << "k=" << pair.k << " l=" << pair.l << " : " << pair.family.value(pair.k)
      << " + " << pair.mix << "*" << pair.family.value(pair.l) << " = "
      << pair.recombine() << '\n';
  return 0;
}

int run_josephus(std::ostream& out, std::ostream& err, u64 n, bool trace) {
  u64 simulated;
  if (trace) {
    std::vector<Elimination> removals;
    simulated = simulate_survivor(n, removals);
    for (const Elimination& e : removals)
      out << "step " << (e.direction == Direction::LeftToRight ? 'R' : 'L')
          << " remove " << e.person << '\n';
  } else {
    simulated = simulate_survivor(n);
  }
  u64 closed = survivor_closed(n);
  if (simulated != closed) {
    err << "error: simulation gives " << simulated << ", closed form gives "
        << closed << '\n';
    return 1;
  }
  out << "W(" << n << ") = " << simulated << " (simulation = closed form)\n";
  return 0;
}

int run_viterate(std::ostream& out, u64 n) {
  print_terms(out, v_iterate(n));
  return 0;
}

int run_psi(std::ostream& out, u64 max_n, unsigned jobs) {
  for (const auto& [n, value] : psi_sweep(max_n, jobs))
    out << n << ' ' << value << '\n';
  return 0;
}

// Evaluates `work` for i in [0, total) across `jobs` threads and streams the
// per-item strings in order.
void ordered_parallel(std::ostream& out, u64 total, unsigned jobs,
                      const std::function<std::string(u64)>& work) {
  if (jobs <= 1 || total < 2 * jobs) {
    for (u64 i = 0; i < total; ++i) out << work(i);
    return;
  }
  std::vector<std::string> results(total);
  std::vector<std::thread> workers;
  u64 chunk = total / jobs + 1;
  for (unsigned w = 0; w < jobs; ++w) {
    u64 begin = w * chunk;
    u64 end = std::min(total, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      for (u64 i = begin; i < end; ++i) results[i] = work(i);
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::string& s : results) out << s;
}

int run_evens(std::ostream& out, u64 max_n, bool unique, bool vn, u64 cap,
              unsigned jobs) {
  if (unique && vn)
    throw std::domain_error("--unique and --vn are mutually exclusive");
  if (unique) {
    print_terms(out, unique_evens(max_n));
    auto [uniques, evens] = unique_even_density(max_n);
    out << "density " << uniques << "/" << evens << '\n';
    return 0;
  }
  if (vn) {
    ordered_parallel(out, max_n, jobs, [cap](u64 i) {
      std::ostringstream line;
      line << (i + 1) << ' ' << v_term(i + 1, cap) << '\n';
      return line.str();
    });
    return 0;
  }
  if (max_n < 2) throw std::domain_error("--max must be at least 2");
  ordered_parallel(out, max_n / 2, jobs, [](u64 i) {
    u64 n = 2 * (i + 1);
    RepresentationSet reps = even_representations(n, n);
    std::ostringstream line;
    line << n << ':';
    for (const auto& [u, v] : reps.pairs) line << " {" << u << ',' << v << '}';
    line << '\n';
    return line.str();
  });
  return 0;
}

int run_lattice(std::ostream& out, u64 r, u64 t, const std::string& tsp) {
  if (tsp.empty()) {
    u64 top = checked_add(checked_pow(r, 2 * t + 1), 1);
    for (u64 n = r + 1; n <= top; n += r) {
      LatticePoint p = to_lattice(n, r, t);
      out << n << ' ' << p.k << ' ' << p.l << '\n';
    }
    return 0;
  }
  PathObjective objective =
      tsp == "min" ? PathObjective::Min : PathObjective::Max;
  PathResult result = path_tsp(r, t, objective);
  out << "path:";
  for (u64 n : result.sequence) out << ' ' << n;
  out << '\n';
  out << "length: " << std::fixed << std::setprecision(9) << result.length
      << " (tolerance " << std::scientific << std::setprecision(0)
      << result.tolerance << ")\n";
  return 0;
}

int run_bfile_export(const FamilyArgs& fam, u64 count, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  export_bfile(file, fam.family(), count);
  if (!file.good()) throw std::runtime_error("write to " + path + " failed");
  return 0;
}

int run_bfile_check(std::ostream& out, const FamilyArgs& fam,
                    const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  CheckReport report = check_bfile(file, fam.family());
  if (report.ok) {
    out << "ok\n";
    return 0;
  }
  out << "mismatch: " << report.detail << '\n';
  return 2;
}

int run_verify(std::ostream& out) {
  std::vector<FixtureResult> results = run_fixtures();
  u64 mismatched = 0;
  for (const FixtureResult& r : results) {
    if (r.ok) {
      out << r.name << ": ok\n";
    } else {
      out << r.name << ": MISMATCH (" << r.detail << ")\n";
      ++mismatched;
    }
  }
  out << "fixtures: " << results.size() - mismatched << " ok, " << mismatched
      << " mismatched\n";
  return mismatched == 0 ? 0 : 2;
}

int run_explore_primes(std::ostream& out, u64 c, u64 count) {
  PrimeSplit split = prime_split(c, count);
  out << "c=" << c << " count=" << count << " primes=" << split.primes
      << " composites=" << split.composites << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"unique additive representations by Moser-type sequences"};
  app.require_subcommand(1);

  FamilyArgs seq_fam;
  u64 seq_count = 0, seq_offset = 0;
  CLI::App* seq = app.add_subcommand("seq", "print sequence terms");
  add_family_options(seq, seq_fam);
  seq->add_option("--count", seq_count, "number of terms")->required();
  CLI::Option* seq_offset_opt =
      seq->add_option("--offset", seq_offset, "first index to print");

  FamilyArgs dec_fam;
  u64 dec_n = 0;
  CLI::App* dec = app.add_subcommand("decompose", "solve the two-term representation");
  add_family_options(dec, dec_fam);
  dec->add_option("--n", dec_n, "number to decompose")->required();

  u64 jos_n = 0;
  bool jos_trace = false;
  CLI::App* jos = app.add_subcommand("josephus", "back-and-forth survivor");
  jos->add_option("--n", jos_n, "line size")->required();
  jos->add_flag("--trace", jos_trace, "print one line per removal");

  u64 vit_n = 0;
  CLI::App* vit = app.add_subcommand("viterate", "survivor iteration orbit");
  vit->add_option("--n", vit_n, "starting number")->required();

  u64 psi_max = 0;
  unsigned psi_jobs = 1;
  CLI::App* psi_cmd = app.add_subcommand("psi", "non-collinearity counts");
  psi_cmd->add_option("--max", psi_max, "largest odd argument")->required();
  psi_cmd->add_option("--jobs", psi_jobs, "worker threads");

  u64 evens_max = 0, evens_cap = 1000;
  bool evens_unique = false, evens_vn = false;
  unsigned evens_jobs = 1;
  CLI::App* evens = app.add_subcommand("evens", "two-term sums of the merged sequence");
  evens->add_option("--max", evens_max, "largest even target, or term count with --vn")
      ->required();
  evens->add_flag("--unique", evens_unique, "list targets with a unique representation");
  evens->add_flag("--vn", evens_vn, "list forced-value terms");
  evens->add_option("--cap", evens_cap, "search cap for --vn");
  evens->add_option("--jobs", evens_jobs, "worker threads");

  u64 lat_r = 2, lat_t = 0;
  std::string lat_tsp;
  CLI::App* lat = app.add_subcommand("lattice", "square bijection and path optima");
  lat->add_option("--r", lat_r, "base")->required();
  lat->add_option("--t", lat_t, "square exponent")->required();
  lat->add_option("--tsp", lat_tsp, "print the optimal open path")
      ->check(CLI::IsMember({"min", "max"}));

  CLI::App* bfile = app.add_subcommand("bfile", "b-file interchange");
  bfile->require_subcommand(1);
  FamilyArgs bfe_fam;
  u64 bfe_count = 0;
  std::string bfe_out;
  CLI::App* bfe = bfile->add_subcommand("export", "write index/value lines");
  add_family_options(bfe, bfe_fam);
  bfe->add_option("--count", bfe_count, "number of records")->required();
  bfe->add_option("--out", bfe_out, "output path")->required();
  FamilyArgs bfc_fam;
  std::string bfc_in;
  CLI::App* bfc = bfile->add_subcommand("check", "verify a b-file");
  add_family_options(bfc, bfc_fam);
  bfc->add_option("--in", bfc_in, "input path")->required();

  CLI::App* verify = app.add_subcommand("verify", "replay reference term lists");

  CLI::App* explore = app.add_subcommand("explore", "informational probes");
  explore->require_subcommand(1);
  u64 exp_c = 3, exp_count = 0;
  CLI::App* exp_primes =
      explore->add_subcommand("primes", "primality tally of shifted terms");
  exp_primes->add_option("--c", exp_c, "odd shift");
  exp_primes->add_option("--count", exp_count, "number of terms")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (seq->parsed())
      return run_seq(out, seq_fam, seq_count, seq_offset,
                     seq_offset_opt->count() > 0);
    if (dec->parsed()) return run_decompose(out, dec_fam, dec_n);
    if (jos->parsed()) return run_josephus(out, err, jos_n, jos_trace);
    if (vit->parsed()) return run_viterate(out, vit_n);
    if (psi_cmd->parsed()) return run_psi(out, psi_max, psi_jobs);
    if (evens->parsed())
      return run_evens(out, evens_max, evens_unique, evens_vn, evens_cap,
                       evens_jobs);
    if (lat->parsed()) return run_lattice(out, lat_r, lat_t, lat_tsp);
    if (bfile->parsed()) {
      if (bfe->parsed()) return run_bfile_export(bfe_fam, bfe_count, bfe_out);
      return run_bfile_check(out, bfc_fam, bfc_in);
    }
    if (verify->parsed()) return run_verify(out);
    if (explore->parsed() && exp_primes->parsed())
      return run_explore_primes(out, exp_c, exp_count);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace moser::cli
