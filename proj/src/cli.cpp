#include "tropical/cli.hpp"

#include "tropical/double_description.hpp"
#include "tropical/extremality.hpp"
#include "tropical/instances.hpp"
#include "tropical/io.hpp"
#include "tropical/minscc.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <functional>
#include <ostream>
#include <sstream>

namespace tropical::cli {

namespace {

HrepFile load_hrep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_hrep(in);
}

LabeledHypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_hypergraph(in);
}

void sort_canonical(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
}

void print_trace(std::ostream& out, const EliminationTrace& trace) {
  out << "# stats steps " << trace.steps.size() << "\n";
  for (const auto& s : trace.steps)
    out << "# step row=" << s.row + 1 << " le=" << s.le_count
        << " gt=" << s.gt_count << " generated=" << s.generated
        << " kept=" << s.kept << " size=" << s.result_size << "\n";
  out << "# stats mean_intermediate " << trace.mean_intermediate() << "\n";
}

double time_ms(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int cmd_extreme(const std::string& path, const ExtremeOptions& opts,
                std::ostream& out, std::ostream& err) {
  if (opts.method != "hypergraph" && opts.method != "residuation") {
    err << "unknown method '" << opts.method << "'\n";
    return kUsageError;
  }
  std::optional<HrepFile> loaded;
  try {
    loaded = load_hrep(path);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsageError;
  }
  const HrepFile& file = *loaded;

  DdOptions dd;
  dd.method = opts.method == "hypergraph" ? ExtremalityMethod::hypergraph
                                          : ExtremalityMethod::residuation;
  dd.jobs = std::max(1, opts.jobs);
  EliminationTrace trace;
  if (opts.stats) dd.trace = &trace;

  try {
    if (opts.affine) {
      std::optional<AffineSystem> affine = file.affine;
      if (!affine && file.cone.rows() == 0)  // unconstrained polyhedron
        affine = AffineSystem(file.cone.A, {}, file.cone.B, {});
      if (!affine) {
        err << "--affine needs 'c' and 'e' sections in the input\n";
        return kSemanticError;
      }
      GeneratorSet rays = compute_extreme(homogenize(*affine), dd);
      DehomogenizeResult split = dehomogenize(rays);
      sort_canonical(split.points);
      sort_canonical(split.rays);
      write_vrep(out, split.points, split.rays, affine->dim());
    } else {
      GeneratorSet rays = compute_extreme(file.cone, dd);
      rays.canonical_sort();
      write_vrep(out, rays);
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kSemanticError;
  }
  if (opts.stats) print_trace(out, trace);
  return kOk;
}

int cmd_check(const std::string& path, const std::string& vector_literal,
              const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<HrepFile> loaded;
  Vector x(1);
  try {
    loaded = load_hrep(path);
    x = parse_vector_literal(vector_literal);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsageError;
  }
  const IneqSystem& system = loaded->cone;
  if (x.dim() != system.dim()) {
    err << "vector dimension " << x.dim() << " does not match system dimension "
        << system.dim() << "\n";
    return kUsageError;
  }
  if (is_zero(x)) {
    err << "the zero vector spans no ray\n";
    return kSemanticError;
  }
  if (!satisfies(system, x)) {
    out << "not a member\n";
    return kSemanticError;
  }

  std::optional<int> type = extreme_type(x, system);
  if (type)
    out << "extreme, type " << *type + 1 << "\n";
  else
    out << "not extreme\n";

  if (opts.oracle) {
    std::vector<int> witnesses;
    try {
      witnesses = extreme_type_witnesses(x, system);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return kSemanticError;
    }
    if (witnesses.empty())
      out << "oracle: not extreme\n";
    else
      out << "oracle: extreme, type " << witnesses.front() + 1 << "\n";
    if (witnesses.empty() != !type.has_value() ||
        (type && std::find(witnesses.begin(), witnesses.end(), *type) ==
                     witnesses.end())) {
      err << "cross-check mismatch between the hypergraph criterion and the "
             "enumeration oracle\n";
      return kCheckMismatch;
    }
  }
  return kOk;
}

int cmd_minscc(const std::string& path, const MinSccOptions& opts,
               std::ostream& out, std::ostream& err) {
  LabeledHypergraph lh;
  try {
    lh = load_hypergraph(path);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  MinSccResult result = min_scc_count(lh.hypergraph);
  auto classes = minimal_classes(result);
  out << result.nb << (result.nb == 1 ? " minimal SCC:" : " minimal SCCs:");
  for (const auto& cls : classes) {
    out << " {";
    for (std::size_t i = 0; i < cls.size(); ++i)
      out << (i ? "," : "") << lh.labels[cls[i]];
    out << "}";
  }
  out << "\n";

  if (opts.oracle) {
    auto expected = scc_oracle(lh.hypergraph).minimal_classes();
    if (expected != classes ||
        static_cast<int>(expected.size()) != result.nb) {
      err << "cross-check mismatch against the reachability oracle\n";
      return kCheckMismatch;
    }
    out << "oracle: agreed\n";
  }
  return kOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.d < 1 || opts.n < 0 || opts.count < 1) {
    err << "bench needs d >= 1, n >= 0, count >= 1\n";
    return kUsageError;
  }
  out << "# generator: density=" << opts.density << " range=[" << opts.coeff_lo
      << "," << opts.coeff_hi << "] seed=" << opts.seed << "\n";
  out << "label,d,n,final_count,mean_intermediate,time_ms_hypergraph,"
         "time_ms_residuation,ratio\n";

  double total_final = 0, total_inter = 0, total_h = 0, total_r = 0;
  for (int i = 0; i < opts.count; ++i) {
    RandomSpec spec{opts.d,       opts.n,        opts.density,
                    opts.coeff_lo, opts.coeff_hi, opts.seed + i};
    IneqSystem system = random_system(spec);

    EliminationTrace trace;
    DdOptions hyper;
    hyper.trace = &trace;
    GeneratorSet rays(spec.d);
    total_h += time_ms([&] { rays = compute_extreme(system, hyper); });

    DdOptions resid;
    resid.method = ExtremalityMethod::residuation;
    GeneratorSet check(spec.d);
    total_r += time_ms([&] { check = compute_extreme(system, resid); });

    if (!same_ray_set(rays, check)) {
      err << "methods disagree on seed " << spec.seed << "\n";
      return kCheckMismatch;
    }
    total_final += static_cast<double>(rays.size());
    total_inter += trace.mean_intermediate();
  }

  const double k = opts.count;
  std::string label =
      opts.label.empty() ? "rnd" + std::to_string(opts.count) : opts.label;
  std::ostringstream row;
  row.setf(std::ios::fixed);
  row.precision(3);
  row << label << ',' << opts.d << ',' << opts.n << ',' << total_final / k
      << ',' << total_inter / k << ',' << total_h / k << ',' << total_r / k
      << ',';
  row.precision(4);
  row << (total_r > 0 ? total_h / total_r : 0.0);
  out << row.str() << "\n";
  return kOk;
}

int cmd_bound(const BoundOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    out << (opts.raw ? upper_bound(opts.n, opts.d)
                     : tropical_ray_bound(opts.n, opts.d))
        << "\n";
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kSemanticError;
  }
  return kOk;
}

}  // namespace tropical::cli
