#include "quivgr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "quivgr/bimodule.hpp"
#include "quivgr/cells.hpp"
#include "quivgr/counting.hpp"
#include "quivgr/error.hpp"
#include "quivgr/fixedpoints.hpp"
#include "quivgr/homology.hpp"
#include "quivgr/motive.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr::cli {

namespace {

struct Flags {
  std::string command;
  std::string file;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11};
  std::uint64_t cap = kDefaultCap;
  bool list = false;
  bool machine = false;
  std::vector<std::size_t> gdim;
  std::string rep;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cli", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PathMode parse_mode(const std::string& m) {
  if (m == "auto") return PathMode::Auto;
  if (m == "tree") return PathMode::Tree;
  if (m == "paths") return PathMode::Paths;
  fail(ErrorCode::InvalidArgument, "cli", "unknown mode " + m);
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

std::string vec(const std::vector<std::size_t>& v) { return "(" + join(v, ",") + ")"; }

struct Context {
  QuiverData data;
  PathQuiver pq;
};

Context load(const Flags& flags) {
  Context c;
  c.data = validate_quiver(read_file(flags.file));
  c.pq = build_path_quiver(c.data.quiver, parse_mode(flags.mode));
  return c;
}

void check_primes(const std::vector<std::uint32_t>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) fail(ErrorCode::InvalidArgument, "cli", std::to_string(primes[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j]) fail(ErrorCode::InvalidArgument, "cli", "repeated prime " + std::to_string(primes[i]));
  }
}

int cmd_info(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  const auto& pq = c.pq;
  const auto f = dim_vector_f(pq, c.data.dims);
  const auto e = dim_vector_e(pq, c.data.dims);
  const auto m = build_canonical_bimodule(pq, c.data.dims).module.dimension_vector();
  std::vector<std::string> names;
  for (std::size_t w = 0; w < pq.vertex_count(); ++w) names.push_back(pq.vertex_name(w));
  const std::string parallel = pq.has_parallel_paths() ? "yes" : "no";
  if (flags.machine) {
    out << "vertices=" << c.data.quiver.vertex_count() << "\n"
        << "arrows=" << c.data.quiver.arrow_count() << "\n"
        << "paths=" << pq.vertex_count() << "\n"
        << "parallel_paths=" << parallel << "\n"
        << "tree_mode=" << (pq.tree_mode() ? "yes" : "no") << "\n"
        << "path_names=" << join(names, ",") << "\n"
        << "f=" << join(f, ",") << "\n"
        << "e=" << join(e, ",") << "\n"
        << "dim_M=" << join(m, ",") << "\n";
    if (pq.tree_mode()) out << "dim_X=" << euler_form(pq, e, f) << "\n";
    return 0;
  }
  out << "vertices: " << c.data.quiver.vertex_count() << "\n"
      << "arrows: " << c.data.quiver.arrow_count() << "\n"
      << "paths: " << pq.vertex_count() << "\n"
      << "parallel paths: " << parallel << "\n"
      << "mode: " << (pq.tree_mode() ? "tree" : "paths") << "\n";
  std::size_t width = 4;
  for (const auto& n : names) width = std::max(width, n.size());
  out << std::left << std::setw(static_cast<int>(width)) << "path" << "  f  e  dim M\n";
  for (std::size_t w = 0; w < names.size(); ++w)
    out << std::left << std::setw(static_cast<int>(width)) << names[w] << "  " << f[w] << "  " << e[w] << "  " << m[w]
        << "\n";
  out << "f = " << vec(f) << "\n"
      << "e = " << vec(e) << "\n"
      << "dim M = " << vec(m) << "\n";
  if (pq.tree_mode()) out << "dim X = " << euler_form(pq, e, f) << "\n";
  return 0;
}

int cmd_fixed_points(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  const auto m = build_canonical_bimodule(c.pq, c.data.dims);
  const auto points = enumerate_fixed_points(m.module, dim_vector_e(c.pq, c.data.dims));
  out << (flags.machine ? "fixed_points=" : "fixed points: ") << points.size() << "\n";
  if (flags.list)
    for (const auto& fp : points) out << (flags.machine ? "point=" : "") << format_fixed_point(c.pq, m, fp) << "\n";
  return 0;
}

int cmd_poincare(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  const auto p = poincare_polynomial(c.pq, c.data.dims, flags.seed);
  if (flags.machine) {
    out << "coefficients=" << join(p.coefficients(), ",") << "\n"
        << "polynomial=" << p.to_string() << "\n";
  } else {
    out << "coefficients: " << p.coefficient_list() << "\n" << p.to_string() << "\n";
  }
  return 0;
}

int cmd_count(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto c = load(flags);
  check_primes(flags.primes);
  const auto& pq = c.pq;
  std::vector<CountSample> samples;
  std::size_t bound = 0;
  if (flags.gdim.empty()) {
    CountOptions options;
    options.cap = flags.cap;
    const auto e = dim_vector_e(pq, c.data.dims);
    const auto m = build_canonical_bimodule(pq, c.data.dims).module.dimension_vector();
    bound = pq.tree_mode() ? static_cast<std::size_t>(std::max(0L, euler_form(pq, e, dim_vector_f(pq, c.data.dims))))
                           : grassmannian_ambient_dimension(m, e);
    for (std::uint32_t q : flags.primes) samples.push_back({q, count_grassmannian_points(pq, c.data.dims, q, options)});
  } else {
    if (flags.gdim.size() != pq.vertex_count())
      fail(ErrorCode::InvalidArgument, "cli",
           "--gdim needs " + std::to_string(pq.vertex_count()) + " entries, one per path");
    bound = repvariety_ambient_dimension(pq.bound(), flags.gdim);
    for (std::uint32_t q : flags.primes)
      samples.push_back({q, count_repvariety_points(pq.bound(), flags.gdim, q, flags.cap)});
  }
  if (!flags.machine) out << "q\tcount\n";
  for (const auto& s : samples) {
    if (flags.machine)
      out << "count." << s.q << "=" << s.count.get_str() << "\n";
    else
      out << s.q << "\t" << s.count.get_str() << "\n";
  }
  if (samples.size() < 2) {
    out << (flags.machine ? "interpolation=skipped\n" : "interpolation skipped: needs at least 2 primes\n");
    return 0;
  }
  bound = std::min(bound, samples.size() - 2);
  const auto fit = try_interpolate(samples, bound);
  if (!fit.ok) {
    out << (flags.machine ? "interpolation=failed\n" : "interpolation failed\n");
    err << "counting: " << error_code_name(ErrorCode::NotPolynomialCount) << ": " << fit.failure << "\n";
    return 1;
  }
  if (flags.machine)
    out << "degree_bound=" << bound << "\n"
        << "polynomial=" << fit.polynomial.to_string() << "\n";
  else
    out << "polynomial (degree <= " << bound << "): " << fit.polynomial.to_string() << "\n";
  return 0;
}

int cmd_motive(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  check_primes(flags.primes);
  if (!c.pq.tree_mode())
    fail(ErrorCode::ParallelPathsUnsupported, "motive", "the recursion is only set up without parallel paths");
  const auto r = repvariety_motives(c.pq, c.data.dims, flags.cap);
  const auto table = recursion_solve(c.pq, c.data.dims, r);
  for (const auto& entry : table.entries) {
    const bool top = &entry == &table.top();
    if (flags.machine)
      out << "M" << vec(entry.g) << "=" << entry.value.to_string() << (top ? " top" : "") << "\n";
    else
      out << vec(entry.g) << " : " << entry.value.to_string() << (top ? "  [top]" : "") << "\n";
  }
  for (const auto& d : table.diagnostics) out << (flags.machine ? "diagnostic=" : "note: ") << d << "\n";
  ConsistencyOptions options;
  options.primes = flags.primes;
  options.cap = flags.cap;
  options.seed = flags.seed;
  const auto report = consistency_check(table, c.pq, c.data.dims, options);
  for (const auto& line : report.lines) out << (flags.machine ? "check=" : "check: ") << line << "\n";
  out << (flags.machine ? "consistent=" : "consistent: ") << (report.ok ? "yes" : "no") << "\n";
  return 0;
}

int cmd_check(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  const auto report = check_smooth(c.pq, c.data.dims);
  if (flags.machine) {
    out << "smooth=" << (report.smooth ? "yes" : "no") << "\n"
        << "support_vertices=" << report.support_vertices << "\n"
        << "tangent_dim=" << report.expected_dim << "\n"
        << "fixed_points=" << report.fixed_points << "\n"
        << "ext_MM=" << report.end_ext.hom << "," << report.end_ext.ext1 << "," << report.end_ext.ext2 << "\n";
    for (const auto& v : report.violations) out << "violation=" << v << "\n";
  } else {
    if (report.smooth)
      out << "smooth: certified at " << report.support_vertices << " support vertices, tangent dim "
          << report.expected_dim << "\n";
    else
      out << "smooth: not certified\n";
    out << "fixed points checked: " << report.fixed_points << "\n"
        << "Ext(M, M) = (" << report.end_ext.hom << ", " << report.end_ext.ext1 << ", " << report.end_ext.ext2 << ")\n";
    for (const auto& v : report.violations) out << "violation: " << v << "\n";
  }
  if (!report.smooth)
    fail(ErrorCode::SmoothnessNotCertified, "cells", std::to_string(report.violations.size()) + " violation(s)");
  return 0;
}

std::vector<QMatrix> parse_rep(const std::string& text, const Context& c) {
  const Quiver& q = c.data.quiver;
  const RationalField f;
  std::vector<QMatrix> maps;
  for (const auto& a : q.arrows())
    maps.emplace_back(f, static_cast<std::size_t>(c.data.dims[a.target]), static_cast<std::size_t>(c.data.dims[a.source]));
  std::vector<char> seen(q.arrow_count(), 0);
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto where = "rep line " + std::to_string(lineno) + ": ";
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream tok(line);
    std::string kw;
    if (!(tok >> kw)) continue;
    std::string id;
    std::size_t rows = 0, cols = 0;
    if (kw != "map" || !(tok >> id >> rows >> cols))
      fail(ErrorCode::ParseError, "cli", where + "expected `map <arrow-id> <rows> <cols> <entries...>`");
    const auto a = q.find_arrow(id);
    if (!a) fail(ErrorCode::DanglingEndpoint, "cli", where + "unknown arrow " + id);
    if (seen[*a]) fail(ErrorCode::DuplicateIdentifier, "cli", where + "second map for arrow " + id);
    seen[*a] = 1;
    if (rows != maps[*a].rows() || cols != maps[*a].cols())
      fail(ErrorCode::InvalidArgument, "cli",
           where + "arrow " + id + " needs a " + std::to_string(maps[*a].rows()) + "x" +
               std::to_string(maps[*a].cols()) + " matrix");
    std::vector<std::string> entries;
    for (std::string t; tok >> t;) entries.push_back(t);
    if (entries.size() != rows * cols)
      fail(ErrorCode::ParseError, "cli", where + "expected " + std::to_string(rows * cols) + " entries");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        mpq_class x;
        if (x.set_str(entries[i * cols + j], 10) != 0 || x.get_den() == 0)
          fail(ErrorCode::ParseError, "cli", where + "bad rational " + entries[i * cols + j]);
        x.canonicalize();
        maps[*a](i, j) = x;
      }
  }
  return maps;
}

int cmd_embed(const Flags& flags, std::ostream& out) {
  const auto c = load(flags);
  const RationalField f;
  std::vector<QMatrix> maps;
  if (flags.rep.empty()) {
    for (const auto& a : c.data.quiver.arrows())
      maps.emplace_back(f, static_cast<std::size_t>(c.data.dims[a.target]), static_cast<std::size_t>(c.data.dims[a.source]));
  } else {
    maps = parse_rep(read_file(flags.rep), c);
  }
  const auto point = embed_representation(c.pq, c.data.dims, maps);
  const auto m = build_canonical_bimodule(c.pq, c.data.dims);
  const bool sub = is_subrepresentation(c.pq.bound(), m.module.representation(f), point);
  const bool dims_ok = point.dimension_vector() == dim_vector_e(c.pq, c.data.dims);
  for (std::size_t w = 0; w < c.pq.vertex_count(); ++w) {
    const auto& s = point.spaces[w];
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      std::vector<std::string> entries;
      for (const auto& x : s.basis().row(i)) entries.push_back(x.get_str());
      rows.push_back("(" + join(entries, ",") + ")");
    }
    if (flags.machine)
      out << "span." << c.pq.vertex_name(w) << "=" << join(rows, ";") << "\n";
    else
      out << c.pq.vertex_name(w) << ": dim " << s.dimension() << " span{" << join(rows, ", ") << "}\n";
  }
  out << (flags.machine ? "subrepresentation=" : "subrepresentation: ") << (sub ? "yes" : "no") << "\n"
      << (flags.machine ? "dimension_vector_e=" : "dimension vector e: ") << (dims_ok ? "yes" : "no") << "\n";
  return sub && dims_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmannians of sub-bimodules over path algebras of acyclic quivers", "quivgr"};
  app.require_subcommand(1, 1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"info", "quiver, path quiver and dimension vectors"},
      {"fixed-points", "torus fixed points of the Grassmannian"},
      {"poincare", "Poincare polynomial from the cell decomposition"},
      {"count", "point counts over prime fields and their interpolation"},
      {"motive", "framed moduli motives from the stratification recursion"},
      {"check", "smoothness certificate from Ext vanishing"},
      {"embed", "point of the Grassmannian given by a representation"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", flags.file, "quiver description")->required();
    sub->add_option("--mode", flags.mode, "auto, tree or paths")->check(CLI::IsMember({"auto", "tree", "paths"}));
    sub->add_option("--seed", flags.seed, "cocharacter seed");
    sub->add_option("--q", flags.primes, "comma separated primes")->delimiter(',');
    sub->add_option("--cap", flags.cap, "enumeration cap");
    sub->add_flag("--list", flags.list, "list fixed points");
    sub->add_flag("--machine", flags.machine, "key=value output");
    sub->add_option("--gdim", flags.gdim, "dimension vector for representation variety counts")->delimiter(',');
    sub->add_option("--rep", flags.rep, "arrow matrices for embed");
    sub->callback([&flags, name = name] { flags.command = name; });
  }

  std::vector<const char*> argv{"quivgr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (flags.command == "info") return cmd_info(flags, out);
    if (flags.command == "fixed-points") return cmd_fixed_points(flags, out);
    if (flags.command == "poincare") return cmd_poincare(flags, out);
    if (flags.command == "count") return cmd_count(flags, out, err);
    if (flags.command == "motive") return cmd_motive(flags, out);
    if (flags.command == "check") return cmd_check(flags, out);
    if (flags.command == "embed") return cmd_embed(flags, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
  return 2;
}

}  // namespace quivgr::cli
